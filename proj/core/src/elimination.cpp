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

#include "sep2xn/elimination.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "sep2xn/errors.hpp"

namespace sep2xn {

namespace {

// Bivariate coefficient grids during elimination: rows are powers of alpha,
// columns powers of beta.
using Grid = CMatrix;

constexpr double kCancelTol = 1e-12;
constexpr int kMaxSylvesterPairs = 6;

double max_abs(const Grid &g) { return g.size() ? g.cwiseAbs().maxCoeff() : 0.0; }

Grid normalize(const Grid &g) {
    const double m = max_abs(g);
    if (m == 0.0) return Grid::Zero(1, 1);
    Grid out = g / m;
    Index rows = out.rows();
    Index cols = out.cols();
    while (rows > 1 && out.row(rows - 1).leftCols(cols).cwiseAbs().maxCoeff() <= kCoefficientTrimTol) --rows;
    while (cols > 1 && out.col(cols - 1).topRows(rows).cwiseAbs().maxCoeff() <= kCoefficientTrimTol) --cols;
    return out.topLeftCorner(rows, cols);
}

Index alpha_degree(const Grid &g) { return g.rows() - 1; }

CVector beta_row(const Grid &g, Index j) { return g.row(j).transpose(); }

// Multiplies every alpha row by the beta polynomial v and shifts by s alpha powers.
Grid times_beta(const Grid &g, const CVector &v, Index s) {
    Grid out = Grid::Zero(g.rows() + s, g.cols() + v.size() - 1);
    for (Index j = 0; j < g.rows(); ++j) {
        for (Index k = 0; k < g.cols(); ++k) {
            if (g(j, k) == Complex(0.0)) continue;
            out.row(j + s).segment(k, v.size()) += g(j, k) * v.transpose();
        }
    }
    return out;
}

// x - y on padded grids, keeping only alpha rows [lo, hi). Throws if the
// kept part cancels to round-off.
Grid cancel(const Grid &x, const Grid &y, Index lo, Index hi) {
    const Index cols = std::max(x.cols(), y.cols());
    Grid xs = Grid::Zero(hi - lo, cols);
    Grid ys = Grid::Zero(hi - lo, cols);
    const Index xr = std::min(hi, x.rows()) - lo;
    const Index yr = std::min(hi, y.rows()) - lo;
    if (xr > 0) xs.topLeftCorner(xr, x.cols()) = x.middleRows(lo, xr);
    if (yr > 0) ys.topLeftCorner(yr, y.cols()) = y.middleRows(lo, yr);
    const double scale = max_abs(x) + max_abs(y);
    const Grid r = xs - ys;
    if (max_abs(r) <= kCancelTol * scale) {
        throw Error(ErrorCode::DegenerateElimination, "elimination step produced the zero polynomial");
    }
    return normalize(r);
}

// Lowers the alpha degree of hi by one using lo (deg lo <= deg hi).
Grid pseudo_reduce(const Grid &hi, const Grid &lo) {
    const Index d = alpha_degree(hi);
    const Index a = alpha_degree(lo);
    const Grid x = times_beta(hi, beta_row(lo, a), 0);
    const Grid y = times_beta(lo, beta_row(hi, d), d - a);
    return cancel(x, y, 0, d);
}

// Eliminates alpha from {A = 0, B = 0}, returning a beta polynomial.
CVector reduce_pair(Grid a, Grid b) {
    a = normalize(a);
    b = normalize(b);
    if (max_abs(a) == 0.0 || max_abs(b) == 0.0) {
        throw Error(ErrorCode::DegenerateElimination, "zero polynomial in elimination");
    }
    for (;;) {
        const Index da = alpha_degree(a);
        const Index db = alpha_degree(b);
        if (da == 0) return beta_row(a, 0);
        if (db == 0) return beta_row(b, 0);
        if (da < db) {
            b = pseudo_reduce(b, a);
        } else if (db < da) {
            a = pseudo_reduce(a, b);
        } else {
            const Index x = da;
            // Leading terms cancel in the first combination, constant terms in the second.
            Grid lead = cancel(times_beta(a, beta_row(b, x), 0), times_beta(b, beta_row(a, x), 0), 0, x);
            Grid trail = cancel(times_beta(a, beta_row(b, 0), 0), times_beta(b, beta_row(a, 0), 0), 1, x + 1);
            a = lead;
            b = trail;
        }
    }
}

UnivariatePoly to_alpha(const CVector &v, bool swapped) {
    // Without a swap v is a polynomial in beta = conj(alpha); conjugating its
    // coefficients gives one in alpha with the same genuine roots.
    return UnivariatePoly(swapped ? v : CVector(v.conjugate()));
}

// Coefficients in t of (a + t d)^j (conj a + t conj d)^k.
CVector line_monomial(Complex a, Complex d, Index j, Index k) {
    CVector out = CVector::Ones(1);
    auto times = [&out](Complex c0, Complex c1) {
        CVector next = CVector::Zero(out.size() + 1);
        next.head(out.size()) += c0 * out;
        next.tail(out.size()) += c1 * out;
        out = next;
    };
    for (Index i = 0; i < j; ++i) times(a, d);
    for (Index i = 0; i < k; ++i) times(std::conj(a), std::conj(d));
    return out;
}

}  // namespace

bool is_self_conjugate(const BivariatePoly &p, Complex *c) {
    const CMatrix &a = p.coeffs();
    const CMatrix b = conjugate_poly(p).coeffs();
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    const double den = a.squaredNorm();
    if (den == 0.0) return false;
    const Complex ratio = (a.adjoint() * b).trace() / den;
    if (c) *c = ratio;
    return (b - ratio * a).norm() <= 1e-10 * a.norm();
}

std::vector<Complex> real_curve_points(const BivariatePoly &p, std::uint64_t seed, int lines) {
    Complex c;
    if (!is_self_conjugate(p, &c)) return {};
    const Complex phi = std::sqrt(c);
    const CMatrix &k = p.coeffs();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> out;
    for (int l = 0; l < lines; ++l) {
        const Complex a(g(rng), g(rng));
        const Complex d = std::polar(1.0, std::uniform_real_distribution<double>(0.0, std::numbers::pi)(rng));
        CVector h = CVector::Zero(k.rows() + k.cols() - 1);
        for (Index j = 0; j < k.rows(); ++j) {
            for (Index m = 0; m < k.cols(); ++m) {
                const CVector t = line_monomial(a, d, j, m);
                h.head(t.size()) += phi * k(j, m) * t;
            }
        }
        // phi P is real along the line; drop round-off in the imaginary part.
        const UnivariatePoly q(CVector(h.real().cast<Complex>()));
        if (q.degree() < 1) continue;
        for (Complex t : univariate_roots(q)) {
            if (std::abs(t.imag()) <= 1e-6 * (1.0 + std::abs(t))) out.push_back(a + t.real() * d);
        }
    }
    return out;
}

std::size_t single_root_bound(Index deg_alpha, Index deg_conj) {
    const Index x = std::min(deg_alpha, deg_conj);
    const Index y = std::max(deg_alpha, deg_conj);
    if (x == 0) return static_cast<std::size_t>(y);
    return (std::size_t{1} << (x - 1)) * static_cast<std::size_t>(x + y * (y - x + 1));
}

std::size_t pair_root_bound(Index deg_alpha, Index deg_conj) {
    const Index x = std::min(deg_alpha, deg_conj);
    const Index y = std::max(deg_alpha, deg_conj);
    return (std::size_t{1} << x) * static_cast<std::size_t>(y);
}

UnivariatePoly eliminate_single(const BivariatePoly &p) {
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "eliminate_single: zero polynomial");
    const bool swapped = p.deg_alpha() > p.deg_conj();
    const BivariatePoly t = swapped ? p.swapped() : p;
    if (t.deg_alpha() == 0) return to_alpha(beta_row(t.coeffs(), 0), swapped);

    Complex c;
    if (!is_self_conjugate(t, &c)) return to_alpha(reduce_pair(t.coeffs(), conjugate_poly(t).coeffs()), swapped);

    // phi t is real on the slice beta = conj alpha. Its zeros are either a
    // sign-changing curve or isolated minima where d t / d beta also vanishes.
    const Complex phi = std::sqrt(c);
    const BivariatePoly dt = t.d_conj();
    const UnivariatePoly crit = to_alpha(reduce_pair(t.coeffs(), dt.coeffs()), swapped);

    std::vector<Complex> samples = {0.0};
    for (int i = 0; i <= 60; ++i) {
        const double r = std::pow(10.0, -3.0 + 0.15 * i);
        for (int k = 0; k < 48; ++k) {
            samples.push_back(std::polar(r, 2.0 * std::numbers::pi * (k + 0.5 * (i % 2)) / 48.0));
        }
    }
    if (crit.degree() >= 1) {
        for (Complex z : univariate_roots(crit)) samples.push_back(swapped ? std::conj(z) : z);
    }
    bool pos = false;
    bool neg = false;
    for (Complex z : samples) {
        const double f = (phi * t.on_conj(z)).real();
        const double thr = 1e-9 * t.scale_at(z);
        pos = pos || f > thr;
        neg = neg || f < -thr;
    }
    if (pos && neg) {
        throw Error(ErrorCode::DegenerateElimination, "self-conjugate polynomial vanishes on a curve");
    }
    return crit;
}

UnivariatePoly eliminate_pair(const BivariatePoly &p, const BivariatePoly &p2) {
    if (p.is_zero() || p2.is_zero()) throw Error(ErrorCode::InvalidArgument, "eliminate_pair: zero polynomial");
    const Index x = std::max(p.deg_alpha(), p2.deg_alpha());
    const Index y = std::max(p.deg_conj(), p2.deg_conj());
    const bool swapped = x > y;
    const BivariatePoly a = swapped ? p.swapped() : p;
    const BivariatePoly b = swapped ? p2.swapped() : p2;
    return to_alpha(reduce_pair(a.coeffs(), b.coeffs()), swapped);
}

namespace {

// Alpha values at which f and g, read as polynomials in beta, share a root.
// These are the eigenvalues of a block companion linearization of the
// Sylvester matrix S(alpha), taken in t = 1 / (alpha - sigma) so that the
// leading block S(sigma) is invertible. Empty when f and g share a factor.
std::vector<Complex> sylvester_candidates(const BivariatePoly &fp, const BivariatePoly &gp) {
    if (fp.is_zero() || gp.is_zero()) return {};
    const Grid f = fp.coeffs() / fp.max_abs();
    const Grid g = gp.coeffs() / gp.max_abs();
    const Index m = f.cols() - 1;
    const Index l = g.cols() - 1;
    if (m == 0 || l == 0) {
        const Grid &u = m == 0 ? f : g;
        if (u.rows() < 2) return {};
        return univariate_roots(UnivariatePoly(CVector(u.col(0))));
    }
    const Index s = m + l;
    const Index d = std::max(f.rows(), g.rows()) - 1;
    if (d == 0) return {};
    std::vector<CMatrix> blocks(static_cast<std::size_t>(d + 1), CMatrix::Zero(s, s));
    for (Index a = 0; a <= d; ++a) {
        CMatrix &b = blocks[static_cast<std::size_t>(a)];
        for (Index i = 0; i < l; ++i) {
            for (Index k = 0; k <= m && a < f.rows(); ++k) b(i, i + k) = f(a, k);
        }
        for (Index j = 0; j < m; ++j) {
            for (Index k = 0; k <= l && a < g.rows(); ++k) b(l + j, j + k) = g(a, k);
        }
    }
    for (const Complex sigma : {Complex(0.613, 0.371), Complex(-0.437, 0.709), Complex(0.291, -0.833)}) {
        // t^d S(sigma + 1/t) = sum_j T_j t^j.
        std::vector<CMatrix> t(static_cast<std::size_t>(d + 1), CMatrix::Zero(s, s));
        for (Index i = 0; i <= d; ++i) {
            double binom = 1.0;
            for (Index c = 0; c <= i; ++c) {
                t[static_cast<std::size_t>(d - i + c)] +=
                    blocks[static_cast<std::size_t>(i)] * (binom * std::pow(sigma, static_cast<double>(c)));
                binom = binom * static_cast<double>(i - c) / static_cast<double>(c + 1);
            }
        }
        const Eigen::FullPivLU<CMatrix> lead(t[static_cast<std::size_t>(d)]);
        if (lead.rank() < s || lead.rcond() < 1e-12) continue;
        CMatrix comp = CMatrix::Zero(d * s, d * s);
        for (Index j = 0; j + 1 < d; ++j) comp.block(j * s, (j + 1) * s, s, s) = CMatrix::Identity(s, s);
        for (Index j = 0; j < d; ++j) comp.block((d - 1) * s, j * s, s, s) = -lead.solve(t[static_cast<std::size_t>(j)]);
        Eigen::ComplexEigenSolver<CMatrix> es(comp, false);
        if (es.info() != Eigen::Success) continue;
        std::vector<Complex> out;
        for (Index i = 0; i < es.eigenvalues().size(); ++i) {
            const Complex ti = es.eigenvalues()(i);
            if (std::abs(ti) < 1e-10) continue;
            const Complex a = sigma + 1.0 / ti;
            if (std::isfinite(a.real()) && std::isfinite(a.imag())) out.push_back(a);
        }
        return out;
    }
    return {};
}

SolveReport finish(const UnivariatePoly &q, const std::vector<BivariatePoly> &system, const ToleranceConfig &tol,
                   std::size_t bound, const std::vector<Complex> &extra) {
    SolveReport out;
    out.eliminant_degree = q.degree();
    if (q.degree() >= 1) out.candidates = univariate_roots(q);
    out.candidates.insert(out.candidates.end(), extra.begin(), extra.end());
    std::vector<Complex> refined;
    refined.reserve(out.candidates.size());
    for (Complex z : out.candidates) refined.push_back(refine_root(z, system));
    out.roots = verify_roots(refined, system, tol, bound);
    return out;
}

}  // namespace

SolveReport solve_single(const BivariatePoly &p, const ToleranceConfig &tol) {
    try {
        const UnivariatePoly q = eliminate_single(p);
        return finish(q, {p}, tol,
                      std::max<std::size_t>(single_root_bound(p.deg_alpha(), p.deg_conj()),
                                            static_cast<std::size_t>(q.degree())),
                      sylvester_candidates(p, conjugate_poly(p)));
    } catch (const Error &e) {
        if (e.code() != ErrorCode::DegenerateElimination) throw;
        SolveReport out;
        out.roots.degenerate = true;
        return out;
    }
}

SolveReport solve_system(const std::vector<BivariatePoly> &system, const ToleranceConfig &tol) {
    std::vector<BivariatePoly> polys;
    for (const BivariatePoly &p : system) {
        if (!p.is_zero()) polys.push_back(p);
    }
    if (polys.empty()) {
        SolveReport out;
        out.roots.degenerate = true;
        return out;
    }
    if (polys.size() == 1) return solve_single(polys.front(), tol);

    std::vector<UnivariatePoly> parts;
    for (std::size_t base = 0; base < polys.size() && parts.empty(); ++base) {
        for (std::size_t j = 0; j < polys.size(); ++j) {
            if (j == base) continue;
            try {
                parts.push_back(eliminate_pair(polys[base], polys[j]));
            } catch (const Error &e) {
                if (e.code() != ErrorCode::DegenerateElimination) throw;
            }
        }
    }
    if (parts.empty()) {
        SolveReport out;
        out.roots.degenerate = true;
        return out;
    }
    std::sort(parts.begin(), parts.end(),
              [](const UnivariatePoly &a, const UnivariatePoly &b) { return a.degree() < b.degree(); });
    UnivariatePoly q = parts.front();
    for (std::size_t j = 1; j < parts.size(); ++j) {
        const UnivariatePoly &u = parts[j];
        if (u.degree() != q.degree() || q.degree() < 1) continue;
        const Complex lq = q.coeffs()(q.degree());
        const Complex lu = u.coeffs()(u.degree());
        const CVector x = lu * q.coeffs();
        const CVector y = lq * u.coeffs();
        const CVector w = x - y;
        const double scale = x.cwiseAbs().maxCoeff() + y.cwiseAbs().maxCoeff();
        // A nearly proportional pair leaves only round-off; keep the previous polynomial then.
        if (w.cwiseAbs().maxCoeff() <= 1e-6 * scale) continue;
        CVector head = w.head(w.size() - 1);
        q = UnivariatePoly(CVector(head / head.cwiseAbs().maxCoeff()));
    }
    std::vector<Complex> extra;
    int pairs = 0;
    for (std::size_t i = 0; i < polys.size() && pairs < kMaxSylvesterPairs; ++i) {
        for (std::size_t j = i + 1; j < polys.size() && pairs < kMaxSylvesterPairs; ++j, ++pairs) {
            const std::vector<Complex> c = sylvester_candidates(polys[i], polys[j]);
            extra.insert(extra.end(), c.begin(), c.end());
        }
    }
    std::size_t bound = static_cast<std::size_t>(std::max<Index>(q.degree(), 0));
    return finish(q, polys, tol, bound, extra);
}

}  // namespace sep2xn
