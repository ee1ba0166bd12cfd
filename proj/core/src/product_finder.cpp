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

#include "sep2xn/product_finder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "sep2xn/elimination.hpp"
#include "sep2xn/errors.hpp"

namespace sep2xn {

namespace {

constexpr std::size_t kMaxDeterminants = 16;
constexpr double kInfiniteAlpha = 1e6;

Complex unit_root(Index k, Index m) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
}

CMatrix random_complex(Index rows, Index cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix m(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) m(i, j) = Complex(g(rng), g(rng));
    }
    return m;
}

struct NullInfo {
    CVector f;
    double sigma_min = 0.0;
    double sigma_next = 0.0;
};

// Smallest right singular pair of a matrix whose rows are residuals of a
// unit product vector, plus the next singular value (infinite if none).
NullInfo smallest_singular(const CMatrix &m) {
    NullInfo out;
    const Index n = m.cols();
    if (m.rows() == 0) {
        out.f = CVector::Unit(n, 0);
        return out;
    }
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
    RVector sv = RVector::Zero(n);
    const Index k = std::min(m.rows(), n);
    sv.head(k) = svd.singularValues().head(k);
    out.f = svd.matrixV().col(n - 1);
    out.sigma_min = sv(n - 1);
    out.sigma_next = n >= 2 ? sv(n - 2) : std::numeric_limits<double>::infinity();
    return out;
}

// Rows of the stacked system rescaled so that (m f)_i is <psi_i|e,f> for unit e.
CMatrix normalized_matrix(const ConstraintSystem &sys, Complex alpha) {
    return sys.matrix(alpha) / std::sqrt(1.0 + std::norm(alpha));
}

// Gauss-Newton on (Re alpha, Im alpha, Re f, Im f) for M(alpha, conj alpha) f = 0
// with the gauge c^dagger f = 1.
void polish(const ConstraintSystem &sys, Complex &alpha, CVector &f) {
    if (std::abs(alpha) > kInfiniteAlpha) return;
    const Index n = sys.n;
    const Index k1 = sys.rows1();
    const Index k2 = sys.rows2();
    const Index m = k1 + k2;
    const CVector c = f / f.squaredNorm();
    auto residual = [&](Complex a, const CVector &x) {
        CVector r(m + 1);
        r.head(m) = sys.matrix(a) * x;
        r(m) = c.dot(x) - 1.0;
        return r;
    };
    CVector r = residual(alpha, f);
    for (int it = 0; it < 20; ++it) {
        const double rn = r.norm();
        if (rn <= 1e-15) break;
        const CMatrix mat = sys.matrix(alpha);
        CMatrix jc(m + 1, 2 + 2 * n);
        jc.setZero();
        CVector jx(m), jy(m);
        if (k1 > 0) {
            jx.head(k1) = sys.a1 * f;
            jy.head(k1) = Complex(0.0, 1.0) * (sys.a1 * f);
        }
        if (k2 > 0) {
            jx.tail(k2) = sys.a2 * f;
            jy.tail(k2) = Complex(0.0, -1.0) * (sys.a2 * f);
        }
        jc.block(0, 0, m, 1) = jx;
        jc.block(0, 1, m, 1) = jy;
        jc.block(0, 2, m, n) = mat;
        jc.block(0, 2 + n, m, n) = Complex(0.0, 1.0) * mat;
        jc.block(m, 2, 1, n) = c.adjoint();
        jc.block(m, 2 + n, 1, n) = Complex(0.0, 1.0) * c.adjoint();
        Eigen::MatrixXd jr(2 * (m + 1), 2 + 2 * n);
        jr.topRows(m + 1) = jc.real();
        jr.bottomRows(m + 1) = jc.imag();
        Eigen::VectorXd rr(2 * (m + 1));
        rr.head(m + 1) = r.real();
        rr.tail(m + 1) = r.imag();
        Eigen::VectorXd step = jr.completeOrthogonalDecomposition().solve(-rr);
        if (!step.allFinite()) break;
        bool improved = false;
        for (int h = 0; h < 6; ++h) {
            const Complex a2(alpha.real() + step(0), alpha.imag() + step(1));
            CVector f2 = f;
            for (Index i = 0; i < n; ++i) f2(i) += Complex(step(2 + i), step(2 + n + i));
            const CVector r2 = residual(a2, f2);
            if (r2.norm() < rn) {
                alpha = a2;
                f = f2;
                r = r2;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
}

void sort_unique(std::vector<ProductVector> &vs, const ToleranceConfig &tol) {
    std::sort(vs.begin(), vs.end(), product_less);
    std::vector<ProductVector> out;
    for (const ProductVector &v : vs) {
        bool dup = false;
        for (const ProductVector &w : out) {
            if (v.alpha_infinite() && w.alpha_infinite()) dup = true;
            if (!v.alpha_infinite() && !w.alpha_infinite() && std::abs(v.alpha() - w.alpha()) < tol.merge_radius) {
                dup = true;
            }
            if (dup) break;
        }
        if (!dup) out.push_back(v);
    }
    vs = std::move(out);
}

std::vector<Complex> sample_alphas(std::mt19937_64 &rng, int complex_count, int real_count) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> out;
    for (int i = 0; i < complex_count; ++i) {
        const double re = g(rng);
        const double im = g(rng);
        out.emplace_back(re, im);
    }
    for (int i = 0; i < real_count; ++i) out.emplace_back(g(rng), 0.0);
    return out;
}

// Turns a root alpha of the stacked system into a product vector, or nothing
// if the system is not singular there. Throws on a null space above one.
std::optional<ProductVector> vector_at_root(const ConstraintSystem &sys, Complex alpha, const ToleranceConfig &tol) {
    NullInfo info = smallest_singular(normalized_matrix(sys, alpha));
    CVector f = info.f;
    polish(sys, alpha, f);
    info = smallest_singular(normalized_matrix(sys, alpha));
    if (info.sigma_min > tol.membership_tol) return std::nullopt;
    if (info.sigma_next <= tol.membership_tol) {
        throw Error(ErrorCode::NonGenericInput, "null space of dimension above one at a root");
    }
    return ProductVector::from_alpha(alpha, info.f);
}

std::optional<ProductVector> vector_at_infinity(const ConstraintSystem &sys, const ToleranceConfig &tol) {
    const CMatrix m = sys.infinity_matrix();
    if (m.rows() == 0) return ProductVector::at_infinity(CVector::Unit(sys.n, 0));
    const NullInfo info = smallest_singular(m);
    if (info.sigma_min > tol.membership_tol) return std::nullopt;
    if (info.sigma_next <= tol.membership_tol) {
        throw Error(ErrorCode::NonGenericInput, "null space of dimension above one at infinity");
    }
    return ProductVector::at_infinity(info.f);
}

std::vector<ProductVector> family_samples(const ConstraintSystem &sys, std::mt19937_64 &rng,
                                          const ToleranceConfig &tol) {
    std::vector<ProductVector> out;
    for (Complex a : sample_alphas(rng, 4, 4)) {
        const CMatrix ns = null_space_at(sys, a, tol);
        if (ns.cols() == 0) continue;
        out.push_back(ProductVector::from_alpha(a, ns.col(0)));
    }
    return out;
}

}  // namespace

ConstraintSystem ConstraintSystem::from_subspaces(const CMatrix &h1, const CMatrix &h2, Index n,
                                                  const ToleranceConfig &tol) {
    if (h1.rows() != 2 * n || (h2.cols() > 0 && h2.rows() != 2 * n)) {
        throw Error(ErrorCode::InvalidArgument, "ConstraintSystem: subspace basis must have 2n rows");
    }
    ConstraintSystem sys;
    sys.n = n;
    const CMatrix c1 = orthogonal_complement(h1, tol);
    sys.a1 = c1.topRows(n).adjoint();
    sys.b1 = c1.bottomRows(n).adjoint();
    if (h2.cols() > 0) {
        const CMatrix c2 = orthogonal_complement(h2, tol);
        sys.a2 = c2.topRows(n).adjoint();
        sys.b2 = c2.bottomRows(n).adjoint();
    } else {
        sys.a2 = CMatrix(0, n);
        sys.b2 = CMatrix(0, n);
    }
    return sys;
}

ConstraintSystem ConstraintSystem::from_subspace(const CMatrix &h, Index n, const ToleranceConfig &tol) {
    return from_subspaces(h, CMatrix(2 * n, 0), n, tol);
}

CMatrix ConstraintSystem::matrix(Complex alpha, Complex beta) const {
    CMatrix m(rows1() + rows2(), n);
    if (rows1() > 0) m.topRows(rows1()) = alpha * a1 + b1;
    if (rows2() > 0) m.bottomRows(rows2()) = beta * a2 + b2;
    return m;
}

CMatrix ConstraintSystem::infinity_matrix() const {
    CMatrix m(rows1() + rows2(), n);
    if (rows1() > 0) m.topRows(rows1()) = a1;
    if (rows2() > 0) m.bottomRows(rows2()) = a2;
    return m;
}

BivariatePoly determinant_poly(const CMatrix &a, const CMatrix &b, const CMatrix &c, Index deg_alpha,
                               Index deg_beta) {
    const Index p = deg_alpha + 1;
    const Index q = deg_beta + 1;
    CMatrix values(p, q);
    for (Index s = 0; s < p; ++s) {
        for (Index t = 0; t < q; ++t) {
            const CMatrix m = unit_root(s, p) * a + unit_root(t, q) * b + c;
            values(s, t) = m.partialPivLu().determinant();
        }
    }
    CMatrix coeffs = CMatrix::Zero(p, q);
    for (Index j = 0; j < p; ++j) {
        for (Index k = 0; k < q; ++k) {
            Complex acc = 0.0;
            for (Index s = 0; s < p; ++s) {
                for (Index t = 0; t < q; ++t) acc += values(s, t) * std::conj(unit_root(j * s, p) * unit_root(k * t, q));
            }
            coeffs(j, k) = acc / static_cast<double>(p * q);
        }
    }
    return BivariatePoly(coeffs);
}

std::vector<BivariatePoly> ConstraintSystem::determinants(std::uint64_t seed) const {
    const Index k1 = rows1();
    const Index k2 = rows2();
    std::vector<BivariatePoly> out;
    if (k1 + k2 < n) return out;

    const bool keep_beta = k2 >= k1;
    const Index kept = keep_beta ? k2 : k1;
    const Index other = keep_beta ? k1 : k2;

    if (kept >= n) {
        std::mt19937_64 rng(seed);
        const CMatrix g = random_complex(n, k1 + k2, rng);
        const CMatrix g1 = g.leftCols(k1);
        const CMatrix g2 = g.rightCols(k2);
        const CMatrix za = k1 > 0 ? CMatrix(g1 * a1) : CMatrix::Zero(n, n);
        const CMatrix zb = k2 > 0 ? CMatrix(g2 * a2) : CMatrix::Zero(n, n);
        CMatrix zc = CMatrix::Zero(n, n);
        if (k1 > 0) zc += g1 * b1;
        if (k2 > 0) zc += g2 * b2;
        out.push_back(determinant_poly(za, zb, zc, k1 > 0 ? n : 0, k2 > 0 ? n : 0));
        return out;
    }

    const Index need = n - kept;
    const CMatrix &ka = keep_beta ? a2 : a1;
    const CMatrix &kb = keep_beta ? b2 : b1;
    const CMatrix &oa = keep_beta ? a1 : a2;
    const CMatrix &ob = keep_beta ? b1 : b2;

    std::vector<Index> pick(static_cast<std::size_t>(need));
    for (Index i = 0; i < need; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (out.size() < kMaxDeterminants) {
        // Rows [0, need) vary with the other block's variable, the rest with the kept one.
        CMatrix va = CMatrix::Zero(n, n);
        CMatrix vb = CMatrix::Zero(n, n);
        CMatrix vc = CMatrix::Zero(n, n);
        for (Index i = 0; i < need; ++i) {
            const Index r = pick[static_cast<std::size_t>(i)];
            (keep_beta ? va : vb).row(i) = oa.row(r);
            vc.row(i) = ob.row(r);
        }
        (keep_beta ? vb : va).bottomRows(kept) = ka;
        vc.bottomRows(kept) = kb;
        const Index deg_other = need;
        out.push_back(determinant_poly(va, vb, vc, keep_beta ? deg_other : kept, keep_beta ? kept : deg_other));

        Index i = need - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == other - need + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (Index j = i + 1; j < need; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

CMatrix null_space_at(const ConstraintSystem &sys, Complex alpha, const ToleranceConfig &tol) {
    const CMatrix m = normalized_matrix(sys, alpha);
    if (m.rows() == 0) return CMatrix::Identity(sys.n, sys.n);
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
    Index r = 0;
    for (Index i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > tol.membership_tol) ++r;
    }
    return svd.matrixV().rightCols(sys.n - r);
}

double subspace_residual(const CMatrix &h, const CVector &v) {
    if (h.cols() == 0) return v.norm();
    return (v - h * (h.adjoint() * v)).norm();
}

ProductSearch products_in_subspace(const CMatrix &h, Index n, const ToleranceConfig &tol, std::uint64_t seed) {
    const CMatrix basis = orthonormal_basis(h, tol);
    const Index dim = basis.cols();
    if (dim < 1) throw Error(ErrorCode::InvalidArgument, "products_in_subspace: empty subspace");
    const ConstraintSystem sys = ConstraintSystem::from_subspace(basis, n, tol);
    std::mt19937_64 rng(seed);
    ProductSearch out;
    if (dim > n) {
        out.infinite_family = true;
        out.vectors = family_samples(sys, rng, tol);
        return out;
    }
    const Index k = sys.rows1();
    const CMatrix g = k == n ? CMatrix(CMatrix::Identity(n, n)) : random_complex(n, k, rng);
    const BivariatePoly det = determinant_poly(g * sys.a1, CMatrix::Zero(n, n), g * sys.b1, n, 0);
    out.determinant_count = 1;
    if (det.is_zero() || det.max_abs() <= 1e-14 * std::pow(operator_norm(g), static_cast<double>(n))) {
        // Singular for every alpha: an infinite family inside a small subspace.
        out.infinite_family = true;
        out.vectors = family_samples(sys, rng, tol);
        return out;
    }
    const UnivariatePoly q(CVector(det.coeffs().col(0)));
    out.eliminant_degree = q.degree();
    std::vector<ProductVector> found;
    if (q.degree() >= 1) {
        for (Complex a : univariate_roots(q)) {
            if (auto v = vector_at_root(sys, a, tol)) found.push_back(*v);
        }
    }
    if (auto v = vector_at_infinity(sys, tol)) found.push_back(*v);
    std::vector<ProductVector> kept;
    for (const ProductVector &v : found) {
        if (subspace_residual(basis, v.vector()) <= tol.membership_tol) kept.push_back(v);
    }
    sort_unique(kept, tol);
    out.vectors = std::move(kept);
    out.exhaustive = true;
    return out;
}

ProductSearch paired_products(const CMatrix &h1, const CMatrix &h2, Index n, const ToleranceConfig &tol,
                              std::uint64_t seed) {
    const CMatrix b1 = orthonormal_basis(h1, tol);
    const CMatrix b2 = orthonormal_basis(h2, tol);
    if (b1.cols() < 1 || b2.cols() < 1) throw Error(ErrorCode::InvalidArgument, "paired_products: empty subspace");
    const ConstraintSystem sys = ConstraintSystem::from_subspaces(b1, b2, n, tol);
    std::mt19937_64 rng(seed);
    ProductSearch out;
    if (sys.rows1() + sys.rows2() < n) {
        out.infinite_family = true;
        out.vectors = family_samples(sys, rng, tol);
        return out;
    }
    const std::vector<BivariatePoly> dets = sys.determinants(seed);
    out.determinant_count = dets.size();
    const SolveReport sol = solve_system(dets, tol);
    if (sol.roots.degenerate) {
        // A self-conjugate determinant whose zero set is a real curve.
        std::vector<ProductVector> curve;
        for (const BivariatePoly &p : dets) {
            for (Complex a : real_curve_points(p, seed)) {
                try {
                    if (auto v = vector_at_root(sys, a, tol)) curve.push_back(*v);
                } catch (const Error &) {
                }
            }
            if (!curve.empty()) break;
        }
        if (curve.empty()) throw Error(ErrorCode::NonGenericInput, "paired_products: elimination degenerated");
        out.infinite_family = true;
        out.vectors = std::move(curve);
        return out;
    }
    out.eliminant_degree = sol.eliminant_degree;
    std::vector<ProductVector> found;
    for (Complex a : sol.roots.roots) {
        if (auto v = vector_at_root(sys, a, tol)) found.push_back(*v);
    }
    if (auto v = vector_at_infinity(sys, tol)) found.push_back(*v);
    std::vector<ProductVector> kept;
    for (const ProductVector &v : found) {
        if (subspace_residual(b1, v.vector()) <= tol.membership_tol &&
            subspace_residual(b2, v.conj_partner().vector()) <= tol.membership_tol) {
            kept.push_back(v);
        }
    }
    sort_unique(kept, tol);
    out.vectors = std::move(kept);
    out.exhaustive = true;
    return out;
}

std::vector<ProductVector> real_e_products(const CMatrix &h, Index n, const ToleranceConfig &tol,
                                           std::uint64_t seed) {
    const CMatrix basis = orthonormal_basis(h, tol);
    if (basis.cols() <= n) {
        throw Error(ErrorCode::PreconditionViolation, "real_e_products: subspace dimension must exceed n");
    }
    const ConstraintSystem sys = ConstraintSystem::from_subspace(basis, n, tol);
    std::mt19937_64 rng(seed);
    std::vector<ProductVector> out;
    for (Complex a : sample_alphas(rng, 0, 8)) {
        const CMatrix ns = null_space_at(sys, a, tol);
        if (ns.cols() > 0) out.push_back(ProductVector::from_alpha(a, ns.col(0)));
    }
    const NullInfo inf = smallest_singular(sys.infinity_matrix());
    if (inf.sigma_min <= tol.membership_tol) out.push_back(ProductVector::at_infinity(inf.f));
    std::sort(out.begin(), out.end(), product_less);
    return out;
}

ProductSearch kernel_product_vectors(const DensityState &rho, std::uint64_t seed) {
    ProductSearch out;
    if (rho.kernel().cols() == 0) {
        out.exhaustive = true;
        return out;
    }
    const ToleranceConfig &tol = rho.tolerances();
    ProductSearch all = products_in_subspace(rho.kernel(), rho.n(), tol, seed);
    out.infinite_family = all.infinite_family;
    out.exhaustive = all.exhaustive;
    out.eliminant_degree = all.eliminant_degree;
    out.determinant_count = all.determinant_count;
    const double scale = std::max(rho.norm(), 1e-300);
    for (const ProductVector &v : all.vectors) {
        const double r1 = (rho.matrix() * v.vector()).norm() / scale;
        const double r2 = (rho.pt_matrix() * v.conj_partner().vector()).norm() / scale;
        if (r1 <= tol.membership_tol && r2 <= tol.membership_tol) out.vectors.push_back(v);
    }
    return out;
}

std::optional<ProductVector> kernel_product_vector(const DensityState &rho, std::uint64_t seed) {
    ProductSearch s = kernel_product_vectors(rho, seed);
    if (s.vectors.empty()) return std::nullopt;
    return s.vectors.front();
}

bool kernel_slice_independence(const DensityState &rho, const CVector &e) {
    const CMatrix &k = rho.kernel();
    if (k.cols() == 0) return true;
    if (e.size() != 2) throw Error(ErrorCode::InvalidArgument, "kernel_slice_independence: e must be in C^2");
    const Index n = rho.n();
    const CMatrix s = std::conj(e(0)) * k.topRows(n) + std::conj(e(1)) * k.bottomRows(n);
    return numerical_rank_kernel(s, rho.tolerances()).rank == k.cols();
}

}  // namespace sep2xn
