// Copyright 2026 The sep2xn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "sep2xn/density_state.hpp"
#include "sep2xn/product_vector.hpp"

namespace sep2xn {

struct CertificateTerm {
    double weight;
    ProductVector vector;
};

/// rho = sum_i weight_i |e_i,f_i><e_i,f_i| with unit product vectors.
struct SeparabilityCertificate {
    std::vector<CertificateTerm> terms;

    std::size_t size() const { return terms.size(); }
    CMatrix reconstruct(Index n) const;
    /// ||rho - reconstruct|| / ||rho|| (operator norm); absolute when rho = 0.
    double reconstruction_error(const CMatrix &rho, Index n) const;
    void append(const SeparabilityCertificate &other);
};

/// False if any weight is not strictly positive or the reconstruction error
/// exceeds cert_recon_tol relative to ||rho||.
bool verify_certificate(const DensityState &rho, const SeparabilityCertificate &cert);
bool verify_certificate(const CMatrix &rho, Index n, const SeparabilityCertificate &cert,
                        const ToleranceConfig &tol);

}  // namespace sep2xn
