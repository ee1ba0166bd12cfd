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

#include "sep2xn/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "sep2xn/errors.hpp"

namespace sep2xn {

namespace {

CMatrix trim_bivariate(const CMatrix &m) {
    if (m.size() == 0) return CMatrix::Zero(1, 1);
    const double big = m.cwiseAbs().maxCoeff();
    const double cut = big * kCoefficientTrimTol;
    Index rows = m.rows();
    Index cols = m.cols();
    while (rows > 1 && m.row(rows - 1).leftCols(cols).cwiseAbs().maxCoeff() <= cut) --rows;
    while (cols > 1 && m.col(cols - 1).topRows(rows).cwiseAbs().maxCoeff() <= cut) --cols;
    if (big == 0.0) return CMatrix::Zero(1, 1);
    return m.topLeftCorner(rows, cols);
}

CVector trim_univariate(const CVector &v) {
    if (v.size() == 0) return CVector::Zero(1);
    const double big = v.cwiseAbs().maxCoeff();
    Index n = v.size();
    while (n > 1 && std::abs(v(n - 1)) <= big * kCoefficientTrimTol) --n;
    if (big == 0.0) return CVector::Zero(1);
    return v.head(n);
}

}  // namespace

BivariatePoly::BivariatePoly() : c_(CMatrix::Zero(1, 1)) {}

BivariatePoly::BivariatePoly(CMatrix coeffs) {
    if (!all_finite(coeffs)) throw Error(ErrorCode::NonFinite, "BivariatePoly: non-finite coefficient");
    c_ = trim_bivariate(coeffs);
}

BivariatePoly BivariatePoly::monomial(Index j, Index k, Complex c) {
    CMatrix m = CMatrix::Zero(j + 1, k + 1);
    m(j, k) = c;
    return BivariatePoly(m);
}

bool BivariatePoly::is_zero() const { return max_abs() == 0.0; }

double BivariatePoly::max_abs() const { return c_.cwiseAbs().maxCoeff(); }

Complex BivariatePoly::operator()(Complex alpha, Complex beta) const {
    Complex acc = 0.0;
    for (Index j = c_.rows() - 1; j >= 0; --j) {
        Complex row = 0.0;
        for (Index k = c_.cols() - 1; k >= 0; --k) row = row * beta + c_(j, k);
        acc = acc * alpha + row;
    }
    return acc;
}

double BivariatePoly::scale_at(Complex alpha) const {
    const double r = std::max(1.0, std::abs(alpha));
    double acc = 0.0;
    for (Index j = 0; j < c_.rows(); ++j) {
        for (Index k = 0; k < c_.cols(); ++k) {
            acc += std::abs(c_(j, k)) * std::pow(r, static_cast<double>(j + k));
        }
    }
    return acc;
}

BivariatePoly BivariatePoly::d_alpha() const {
    if (c_.rows() == 1) return BivariatePoly();
    CMatrix m(c_.rows() - 1, c_.cols());
    for (Index j = 1; j < c_.rows(); ++j) m.row(j - 1) = static_cast<double>(j) * c_.row(j);
    return BivariatePoly(m);
}

BivariatePoly BivariatePoly::d_conj() const { return swapped().d_alpha().swapped(); }

BivariatePoly BivariatePoly::swapped() const { return BivariatePoly(CMatrix(c_.transpose())); }

BivariatePoly operator+(const BivariatePoly &a, const BivariatePoly &b) {
    const Index r = std::max(a.c_.rows(), b.c_.rows());
    const Index c = std::max(a.c_.cols(), b.c_.cols());
    CMatrix m = CMatrix::Zero(r, c);
    m.topLeftCorner(a.c_.rows(), a.c_.cols()) += a.c_;
    m.topLeftCorner(b.c_.rows(), b.c_.cols()) += b.c_;
    return BivariatePoly(m);
}

BivariatePoly operator-(const BivariatePoly &a, const BivariatePoly &b) { return a + Complex(-1.0) * b; }

BivariatePoly operator*(Complex s, const BivariatePoly &a) { return BivariatePoly(CMatrix(s * a.c_)); }

BivariatePoly operator*(const BivariatePoly &a, const BivariatePoly &b) {
    CMatrix m = CMatrix::Zero(a.c_.rows() + b.c_.rows() - 1, a.c_.cols() + b.c_.cols() - 1);
    for (Index j = 0; j < a.c_.rows(); ++j) {
        for (Index k = 0; k < a.c_.cols(); ++k) {
            if (a.c_(j, k) == Complex(0.0)) continue;
            m.block(j, k, b.c_.rows(), b.c_.cols()) += a.c_(j, k) * b.c_;
        }
    }
    return BivariatePoly(m);
}

BivariatePoly conjugate_poly(const BivariatePoly &p) { return BivariatePoly(CMatrix(p.coeffs().adjoint())); }

UnivariatePoly::UnivariatePoly() : c_(CVector::Zero(1)) {}

UnivariatePoly::UnivariatePoly(CVector coeffs) {
    if (!all_finite(coeffs)) throw Error(ErrorCode::NonFinite, "UnivariatePoly: non-finite coefficient");
    c_ = trim_univariate(coeffs);
}

UnivariatePoly UnivariatePoly::from_roots(const std::vector<Complex> &roots) {
    CVector c = CVector::Zero(static_cast<Index>(roots.size()) + 1);
    c(0) = 1.0;
    Index deg = 0;
    for (Complex r : roots) {
        ++deg;
        for (Index k = deg; k >= 1; --k) c(k) = c(k - 1) - r * c(k);
        c(0) = -r * c(0);
    }
    return UnivariatePoly(c);
}

bool UnivariatePoly::is_zero() const { return c_.cwiseAbs().maxCoeff() == 0.0; }

Complex UnivariatePoly::operator()(Complex x) const {
    Complex acc = 0.0;
    for (Index k = c_.size() - 1; k >= 0; --k) acc = acc * x + c_(k);
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (c_.size() == 1) return UnivariatePoly();
    CVector d(c_.size() - 1);
    for (Index k = 1; k < c_.size(); ++k) d(k - 1) = static_cast<double>(k) * c_(k);
    return UnivariatePoly(d);
}

std::vector<Complex> univariate_roots(const UnivariatePoly &q) {
    const Index n = q.degree();
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "univariate_roots: degree must be at least 1");
    const CVector &c = q.coeffs();
    const Complex lead = c(n);

    // alpha = s z with s chosen so the monic coefficients in z stay near unit size.
    double s = 0.0;
    for (Index k = 0; k < n; ++k) {
        const double ratio = std::abs(c(k) / lead);
        if (ratio > 0.0) s = std::max(s, std::pow(ratio, 1.0 / static_cast<double>(n - k)));
    }
    if (!(s > 0.0)) s = 1.0;
    if (!std::isfinite(s)) throw Error(ErrorCode::NonFinite, "univariate_roots: coefficient overflow");

    CMatrix comp = CMatrix::Zero(n, n);
    for (Index i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (Index k = 0; k < n; ++k) {
        const Complex a = c(k) / lead * std::pow(s, static_cast<double>(k - n));
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error(ErrorCode::NonFinite, "univariate_roots: coefficient overflow");
        }
        comp(k, n - 1) = -a;
    }
    Eigen::ComplexEigenSolver<CMatrix> es(comp, false);
    if (es.info() != Eigen::Success) {
        throw Error(ErrorCode::DecompositionFailure, "univariate_roots: eigensolver did not converge");
    }

    const UnivariatePoly dq = q.derivative();
    std::vector<Complex> roots;
    roots.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        Complex x = s * es.eigenvalues()(i);
        Complex fx = q(x);
        for (int it = 0; it < 8; ++it) {
            const Complex d = dq(x);
            if (std::abs(d) == 0.0 || std::abs(fx) == 0.0) break;
            Complex step = fx / d;
            bool improved = false;
            for (int h = 0; h < 6; ++h) {
                const Complex y = x - step;
                const Complex fy = q(y);
                if (std::abs(fy) < std::abs(fx)) {
                    x = y;
                    fx = fy;
                    improved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!improved) break;
        }
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            throw Error(ErrorCode::NonFinite, "univariate_roots: non-finite root");
        }
        roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end(), root_less);
    return roots;
}

bool root_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

double relative_residual(Complex alpha, const std::vector<BivariatePoly> &system) {
    double worst = 0.0;
    for (const BivariatePoly &p : system) {
        const double sc = p.scale_at(alpha);
        if (sc == 0.0) continue;
        worst = std::max(worst, std::abs(p.on_conj(alpha)) / sc);
    }
    return worst;
}

Complex refine_root(Complex alpha, const std::vector<BivariatePoly> &system, int max_iter) {
    std::vector<BivariatePoly> pa, pb;
    std::vector<double> w;
    for (const BivariatePoly &p : system) {
        pa.push_back(p.d_alpha());
        pb.push_back(p.d_conj());
        const double m = p.max_abs();
        w.push_back(m > 0.0 ? 1.0 / m : 0.0);
    }
    const Index m = static_cast<Index>(system.size());
    auto residual = [&](Complex a) {
        Eigen::VectorXd r(2 * m);
        for (Index i = 0; i < m; ++i) {
            const Complex v = w[static_cast<std::size_t>(i)] * system[static_cast<std::size_t>(i)].on_conj(a);
            r(2 * i) = v.real();
            r(2 * i + 1) = v.imag();
        }
        return r;
    };
    Eigen::VectorXd r = residual(alpha);
    for (int it = 0; it < max_iter; ++it) {
        const double rn = r.norm();
        if (rn == 0.0) break;
        Eigen::MatrixXd jac(2 * m, 2);
        for (Index i = 0; i < m; ++i) {
            const std::size_t u = static_cast<std::size_t>(i);
            const Complex da = w[u] * pa[u].on_conj(alpha);
            const Complex db = w[u] * pb[u].on_conj(alpha);
            const Complex dx = da + db;
            const Complex dy = Complex(0.0, 1.0) * (da - db);
            jac(2 * i, 0) = dx.real();
            jac(2 * i + 1, 0) = dx.imag();
            jac(2 * i, 1) = dy.real();
            jac(2 * i + 1, 1) = dy.imag();
        }
        const Eigen::Vector2d step = jac.completeOrthogonalDecomposition().solve(-r);
        if (!step.allFinite()) break;
        Complex delta(step(0), step(1));
        bool improved = false;
        for (int h = 0; h < 8; ++h) {
            const Complex trial = alpha + delta;
            const Eigen::VectorXd rt = residual(trial);
            if (rt.norm() < rn) {
                alpha = trial;
                r = rt;
                improved = true;
                break;
            }
            delta *= 0.5;
        }
        if (!improved || std::abs(delta) <= 1e-16 * (1.0 + std::abs(alpha))) break;
    }
    return alpha;
}

RootSet verify_roots(const std::vector<Complex> &candidates, const std::vector<BivariatePoly> &system,
                     const ToleranceConfig &tol, std::size_t bound) {
    if (system.empty()) throw Error(ErrorCode::InvalidArgument, "verify_roots: empty system");
    std::vector<std::pair<double, Complex>> kept;
    for (Complex a : candidates) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) continue;
        const double res = relative_residual(a, system);
        if (res <= tol.root_residual_tol) kept.emplace_back(res, a);
    }
    // Best residual first so each cluster is represented by its most accurate member.
    std::stable_sort(kept.begin(), kept.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    RootSet out;
    out.bound_used = bound;
    for (const auto &[res, a] : kept) {
        bool dup = false;
        for (Complex b : out.roots) {
            if (std::abs(a - b) < tol.merge_radius) {
                dup = true;
                break;
            }
        }
        if (!dup) out.roots.push_back(a);
    }
    std::sort(out.roots.begin(), out.roots.end(), root_less);
    return out;
}

}  // namespace sep2xn
