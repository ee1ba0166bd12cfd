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

#include "sep2xn/certificate.hpp"

#include <cmath>

#include "sep2xn/errors.hpp"

namespace sep2xn {

CMatrix SeparabilityCertificate::reconstruct(Index n) const {
    CMatrix out = CMatrix::Zero(2 * n, 2 * n);
    for (const CertificateTerm &t : terms) {
        if (t.vector.n() != n) throw Error(ErrorCode::InvalidArgument, "certificate term has the wrong dimension");
        const CVector v = t.vector.vector();
        out += t.weight * (v * v.adjoint());
    }
    return out;
}

double SeparabilityCertificate::reconstruction_error(const CMatrix &rho, Index n) const {
    const double err = operator_norm(rho - reconstruct(n));
    const double scale = operator_norm(rho);
    return scale > 0.0 ? err / scale : err;
}

void SeparabilityCertificate::append(const SeparabilityCertificate &other) {
    terms.insert(terms.end(), other.terms.begin(), other.terms.end());
}

bool verify_certificate(const CMatrix &rho, Index n, const SeparabilityCertificate &cert,
                        const ToleranceConfig &tol) {
    if (rho.rows() != 2 * n || rho.cols() != 2 * n) return false;
    for (const CertificateTerm &t : cert.terms) {
        if (!(t.weight > 0.0) || !std::isfinite(t.weight) || t.vector.n() != n) return false;
    }
    const double err = operator_norm(rho - cert.reconstruct(n));
    return err <= tol.cert_recon_tol * operator_norm(rho);
}

bool verify_certificate(const DensityState &rho, const SeparabilityCertificate &cert) {
    return verify_certificate(rho.matrix(), rho.n(), cert, rho.tolerances());
}

}  // namespace sep2xn
