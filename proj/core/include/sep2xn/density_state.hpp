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

#include "sep2xn/linalg.hpp"

namespace sep2xn {

/// A Hermitian PSD operator on C^2 (x) C^n with spectral caches for itself
/// and its partial transpose. Immutable once constructed.
class DensityState {
  public:
    /// Validates Hermiticity, positivity and a positive trace, then stores the
    /// Hermitian part. The partial transpose is not required to be PSD.
    DensityState(CMatrix matrix, Index n, ToleranceConfig tol = {});

    Index n() const { return n_; }
    const CMatrix &matrix() const { return matrix_; }
    const CMatrix &pt_matrix() const { return pt_matrix_; }
    const ToleranceConfig &tolerances() const { return tol_; }

    double norm() const { return norm_; }
    double trace() const { return matrix_.trace().real(); }

    const HermitianSplit &spectrum() const { return split_; }
    const HermitianSplit &pt_spectrum() const { return pt_split_; }

    Index rank() const { return split_.rank; }
    Index pt_rank() const { return pt_split_.rank; }
    const CMatrix &kernel() const { return split_.kernel; }
    const CMatrix &range() const { return split_.range; }
    const CMatrix &pt_kernel() const { return pt_split_.kernel; }
    const CMatrix &pt_range() const { return pt_split_.range; }
    const CMatrix &pseudoinverse() const { return pinv_; }
    const CMatrix &pt_pseudoinverse() const { return pt_pinv_; }

    double pt_min_eigenvalue() const { return pt_split_.min_eigenvalue(); }
    /// lambda_min(rho^TA) >= -psd_tol * ||rho||.
    bool is_ppt() const;
    /// ||rho - rho^TA|| <= tol * ||rho||.
    bool is_pt_invariant(double rel_tol) const;
    bool borderline() const { return split_.borderline || pt_split_.borderline; }

  private:
    Index n_;
    ToleranceConfig tol_;
    CMatrix matrix_;
    CMatrix pt_matrix_;
    double norm_ = 0.0;
    HermitianSplit split_;
    HermitianSplit pt_split_;
    CMatrix pinv_;
    CMatrix pt_pinv_;
};

/// rho^TA as a state. Throws NotPsd if rho is not PPT.
DensityState partial_transpose(const DensityState &rho);

}  // namespace sep2xn
