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

#include "sep2xn/density_state.hpp"

#include "sep2xn/errors.hpp"

namespace sep2xn {

DensityState::DensityState(CMatrix matrix, Index n, ToleranceConfig tol) : n_(n), tol_(tol) {
    tol_.validate();
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "DensityState: n must be at least 1");
    if (matrix.rows() != 2 * n || matrix.cols() != 2 * n) {
        throw Error(ErrorCode::InvalidArgument, "DensityState: matrix must be 2n x 2n");
    }
    if (!all_finite(matrix)) throw Error(ErrorCode::NonFinite, "DensityState: non-finite entries");
    if (!is_hermitian(matrix, tol_.psd_tol)) {
        throw Error(ErrorCode::NotHermitian, "DensityState: matrix is not Hermitian");
    }
    matrix_ = hermitian_part(matrix);
    norm_ = operator_norm(matrix_);
    if (!(trace() > 0.0)) throw Error(ErrorCode::InvalidArgument, "DensityState: trace must be positive");
    split_ = hermitian_split(matrix_, tol_);
    if (split_.min_eigenvalue() < -tol_.psd_tol * norm_) {
        throw Error(ErrorCode::NotPsd, "DensityState: matrix is not positive semidefinite");
    }
    pt_matrix_ = partial_transpose(matrix_, n_);
    pt_split_ = hermitian_split(pt_matrix_, tol_);
    pinv_ = split_.pseudoinverse();
    pt_pinv_ = pt_split_.pseudoinverse();
}

bool DensityState::is_ppt() const { return pt_split_.min_eigenvalue() >= -tol_.psd_tol * norm_; }

bool DensityState::is_pt_invariant(double rel_tol) const {
    return operator_norm(matrix_ - pt_matrix_) <= rel_tol * norm_;
}

DensityState partial_transpose(const DensityState &rho) {
    if (!rho.is_ppt()) throw Error(ErrorCode::NotPsd, "partial_transpose: state is not PPT");
    return DensityState(rho.pt_matrix(), rho.n(), rho.tolerances());
}

}  // namespace sep2xn
