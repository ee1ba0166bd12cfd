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

#include "sep2xn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sep2xn/errors.hpp"

namespace sep2xn {

void ToleranceConfig::validate() const {
    auto positive = [](double v, const char *name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be positive and finite");
        }
    };
    positive(rank_rel_tol, "rank_rel_tol");
    positive(psd_tol, "psd_tol");
    positive(root_residual_tol, "root_residual_tol");
    positive(cert_recon_tol, "cert_recon_tol");
    positive(membership_tol, "membership_tol");
    positive(merge_radius, "merge_radius");
    if (rank_rel_tol >= 1.0) {
        throw Error(ErrorCode::InvalidArgument, "rank_rel_tol must be below 1");
    }
}

namespace {

void require_finite(const CMatrix &m, const char *where) {
    if (!all_finite(m)) {
        throw Error(ErrorCode::DecompositionFailure, std::string(where) + ": non-finite entries");
    }
}

void require_square(const CMatrix &m, const char *where) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::InvalidArgument, std::string(where) + ": matrix is not square");
    }
}

}  // namespace

bool all_finite(const CMatrix &m) {
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
        }
    }
    return true;
}

CMatrix partial_transpose(const CMatrix &rho, Index n) {
    if (n < 1 || rho.rows() != 2 * n || rho.cols() != 2 * n) {
        throw Error(ErrorCode::InvalidArgument, "partial_transpose: expected a 2n x 2n matrix");
    }
    CMatrix out = rho;
    out.block(0, n, n, n) = rho.block(n, 0, n, n);
    out.block(n, 0, n, n) = rho.block(0, n, n, n);
    return out;
}

CMatrix partial_trace_qubit(const CMatrix &rho, Index n) {
    if (n < 1 || rho.rows() != 2 * n || rho.cols() != 2 * n) {
        throw Error(ErrorCode::InvalidArgument, "partial_trace_qubit: expected a 2n x 2n matrix");
    }
    return rho.block(0, 0, n, n) + rho.block(n, n, n, n);
}

double operator_norm(const CMatrix &m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

bool is_hermitian(const CMatrix &m, double rel_tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(operator_norm(m), 1e-300);
    return operator_norm(m - m.adjoint()) <= rel_tol * scale;
}

CMatrix hermitian_part(const CMatrix &m) { return 0.5 * (m + m.adjoint()); }

double min_eigenvalue(const CMatrix &hermitian) {
    if (hermitian.size() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(hermitian), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

RankSplit numerical_rank_kernel(const CMatrix &m, const ToleranceConfig &tol) {
    require_finite(m, "numerical_rank_kernel");
    RankSplit out;
    const Index cols = m.cols();
    if (m.rows() == 0 || cols == 0) {
        out.kernel = CMatrix::Identity(cols, cols);
        out.range = CMatrix(m.rows(), 0);
        return out;
    }
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) {
        throw Error(ErrorCode::DecompositionFailure, "numerical_rank_kernel: SVD did not converge");
    }
    out.singular_values = svd.singularValues();
    const double smax = out.singular_values.size() ? out.singular_values(0) : 0.0;
    out.cutoff = tol.rank_rel_tol * smax;
    Index r = 0;
    for (Index i = 0; i < out.singular_values.size(); ++i) {
        const double s = out.singular_values(i);
        if (s > out.cutoff && smax > 0.0) ++r;
        if (smax > 0.0 && s > out.cutoff / 10.0 && s < out.cutoff * 10.0) out.borderline = true;
    }
    out.rank = r;
    out.range = svd.matrixU().leftCols(r);
    out.kernel = svd.matrixV().rightCols(cols - r);
    return out;
}

double HermitianSplit::max_abs_eigenvalue() const {
    return eigenvalues.size() ? eigenvalues.cwiseAbs().maxCoeff() : 0.0;
}

CMatrix HermitianSplit::power(double p) const {
    const Index n = eigenvectors.rows();
    CMatrix out = CMatrix::Zero(n, n);
    for (Index i = 0; i < eigenvalues.size(); ++i) {
        const double lam = eigenvalues(i);
        if (std::abs(lam) <= cutoff || lam <= 0.0) continue;
        const CVector v = eigenvectors.col(i);
        out += std::pow(lam, p) * (v * v.adjoint());
    }
    return out;
}

HermitianSplit hermitian_split(const CMatrix &m, const ToleranceConfig &tol) {
    require_square(m, "hermitian_split");
    require_finite(m, "hermitian_split");
    HermitianSplit out;
    const Index n = m.rows();
    if (n == 0) return out;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m));
    if (es.info() != Eigen::Success) {
        throw Error(ErrorCode::DecompositionFailure, "hermitian_split: eigensolver did not converge");
    }
    out.eigenvalues = es.eigenvalues();
    out.eigenvectors = es.eigenvectors();
    const double scale = out.max_abs_eigenvalue();
    out.cutoff = tol.rank_rel_tol * scale;
    std::vector<Index> kern, rng;
    for (Index i = 0; i < n; ++i) {
        const double a = std::abs(out.eigenvalues(i));
        if (scale > 0.0 && a > out.cutoff) {
            rng.push_back(i);
        } else {
            kern.push_back(i);
        }
        if (scale > 0.0 && a > out.cutoff / 10.0 && a < out.cutoff * 10.0) out.borderline = true;
    }
    out.rank = static_cast<Index>(rng.size());
    out.kernel.resize(n, static_cast<Index>(kern.size()));
    out.range.resize(n, out.rank);
    for (std::size_t i = 0; i < kern.size(); ++i) out.kernel.col(static_cast<Index>(i)) = out.eigenvectors.col(kern[i]);
    for (std::size_t i = 0; i < rng.size(); ++i) out.range.col(static_cast<Index>(i)) = out.eigenvectors.col(rng[i]);
    return out;
}

CMatrix pseudoinverse(const CMatrix &m, const ToleranceConfig &tol) {
    require_square(m, "pseudoinverse");
    if (!is_hermitian(m, tol.psd_tol)) {
        throw Error(ErrorCode::NotHermitian, "pseudoinverse: input is not Hermitian");
    }
    const HermitianSplit split = hermitian_split(m, tol);
    const Index n = m.rows();
    CMatrix out = CMatrix::Zero(n, n);
    for (Index i = 0; i < split.eigenvalues.size(); ++i) {
        const double lam = split.eigenvalues(i);
        if (std::abs(lam) <= split.cutoff || lam == 0.0) continue;
        const CVector v = split.eigenvectors.col(i);
        out += (1.0 / lam) * (v * v.adjoint());
    }
    return out;
}

bool psd_difference_check(const CMatrix &x, const CMatrix &y, const ToleranceConfig &tol) {
    require_square(x, "psd_difference_check");
    require_square(y, "psd_difference_check");
    if (x.rows() != y.rows()) {
        throw Error(ErrorCode::InvalidArgument, "psd_difference_check: size mismatch");
    }
    for (const CMatrix *m : {&x, &y}) {
        if (!is_hermitian(*m, tol.psd_tol)) {
            throw Error(ErrorCode::NotHermitian, "psd_difference_check: input is not Hermitian");
        }
        const double nrm = operator_norm(*m);
        if (min_eigenvalue(*m) < -tol.psd_tol * nrm) {
            throw Error(ErrorCode::NotPsd, "psd_difference_check: input is not PSD");
        }
    }
    const double ynorm = operator_norm(y);
    if (ynorm == 0.0) return true;
    const HermitianSplit xs = hermitian_split(x, tol);
    const double scale = std::max(xs.max_abs_eigenvalue(), ynorm);
    if (xs.kernel.cols() > 0) {
        const CMatrix ky = xs.kernel.adjoint() * hermitian_part(y) * xs.kernel;
        Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(ky), Eigen::EigenvaluesOnly);
        if (es.eigenvalues().cwiseAbs().maxCoeff() > tol.psd_tol * scale) return false;
    }
    if (xs.rank == 0) return false;
    const CMatrix xinvhalf = xs.power(-0.5);
    const CMatrix w = xinvhalf * hermitian_part(y) * xinvhalf;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(w), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(w.rows() - 1) <= 1.0 + tol.psd_tol;
}

CMatrix orthonormal_basis(const CMatrix &columns, const ToleranceConfig &tol) {
    if (columns.cols() == 0) return CMatrix(columns.rows(), 0);
    return numerical_rank_kernel(columns, tol).range;
}

CMatrix orthogonal_complement(const CMatrix &columns, const ToleranceConfig &tol) {
    if (columns.cols() == 0) return CMatrix::Identity(columns.rows(), columns.rows());
    return numerical_rank_kernel(columns.adjoint(), tol).kernel;
}

CVector kron(const CVector &a, const CVector &b) {
    CVector out(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

}  // namespace sep2xn
