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

#include <complex>

#include <Eigen/Dense>

#include "sep2xn/tolerance.hpp"

namespace sep2xn {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Rank, kernel and range of a matrix read off its singular value
/// decomposition. Kernel and range columns are orthonormal.
struct RankSplit {
    Index rank = 0;
    CMatrix kernel;
    CMatrix range;
    RVector singular_values;
    double cutoff = 0.0;
    /// Some singular value lies within a factor of ten of the cutoff.
    bool borderline = false;
};

/// Spectral data of a Hermitian matrix. Eigenvalues ascend; rank counts
/// eigenvalues with |lambda| above the cutoff.
struct HermitianSplit {
    RVector eigenvalues;
    CMatrix eigenvectors;
    Index rank = 0;
    CMatrix kernel;
    CMatrix range;
    double cutoff = 0.0;
    bool borderline = false;

    double min_eigenvalue() const { return eigenvalues.size() ? eigenvalues(0) : 0.0; }
    double max_abs_eigenvalue() const;

    /// Sum over the range of lambda^p |x><x|; kernel directions are dropped.
    CMatrix power(double p) const;
    CMatrix pseudoinverse() const { return power(-1.0); }
    /// Orthogonal projector onto the kernel.
    CMatrix kernel_projector() const { return kernel * kernel.adjoint(); }
};

/// Transpose on the qubit factor of C^2 (x) C^n in the computational basis.
/// With the flat index i*n + k the off-diagonal n x n blocks are exchanged.
CMatrix partial_transpose(const CMatrix &rho, Index n);

/// Trace over the qubit factor, giving the n x n operator on the second factor.
CMatrix partial_trace_qubit(const CMatrix &rho, Index n);

RankSplit numerical_rank_kernel(const CMatrix &m, const ToleranceConfig &tol);

HermitianSplit hermitian_split(const CMatrix &m, const ToleranceConfig &tol);

/// Spectral pseudoinverse of a Hermitian matrix. Eigenvalues below the rank
/// cutoff are dropped, not inverted.
CMatrix pseudoinverse(const CMatrix &m, const ToleranceConfig &tol);

/// Decides X - Y >= 0 for PSD X, Y through kernel containment and
/// ||Y^{1/2} X^{-1/2}||^2 <= 1 + psd_tol.
bool psd_difference_check(const CMatrix &x, const CMatrix &y, const ToleranceConfig &tol);

/// Largest singular value.
double operator_norm(const CMatrix &m);

bool all_finite(const CMatrix &m);
bool is_hermitian(const CMatrix &m, double rel_tol);
CMatrix hermitian_part(const CMatrix &m);
double min_eigenvalue(const CMatrix &hermitian);

/// Orthonormal basis of the column span, using the rank tolerance.
CMatrix orthonormal_basis(const CMatrix &columns, const ToleranceConfig &tol);

/// Orthonormal basis of the orthogonal complement of the column span.
CMatrix orthogonal_complement(const CMatrix &columns, const ToleranceConfig &tol);

/// Kronecker product of two column vectors.
CVector kron(const CVector &a, const CVector &b);

}  // namespace sep2xn
