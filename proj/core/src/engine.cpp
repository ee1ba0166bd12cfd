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

#include "sep2xn/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "sep2xn/errors.hpp"

namespace sep2xn {

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Separable: return "Separable";
        case VerdictKind::EntangledNPT: return "EntangledNPT";
        case VerdictKind::EntangledPPT: return "EntangledPPT";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

std::string to_string(InconclusiveReason reason) {
    switch (reason) {
        case InconclusiveReason::None: return "None";
        case InconclusiveReason::NonGenericInput: return "NonGenericInput";
        case InconclusiveReason::InfiniteFamilyUnresolved: return "InfiniteFamilyUnresolved";
        case InconclusiveReason::ReductionStalled: return "ReductionStalled";
    }
    return "Unknown";
}

std::string to_string(SubtractionCase c) {
    switch (c) {
        case SubtractionCase::I: return "i";
        case SubtractionCase::II: return "ii";
        case SubtractionCase::III: return "iii";
    }
    return "?";
}

Verdict Verdict::separable(SeparabilityCertificate cert) {
    Verdict v;
    v.kind = VerdictKind::Separable;
    v.certificate = std::move(cert);
    return v;
}

Verdict Verdict::inconclusive(InconclusiveReason reason, std::string detail) {
    Verdict v;
    v.kind = VerdictKind::Inconclusive;
    v.reason = reason;
    v.detail = std::move(detail);
    return v;
}

namespace {

ProductVector lift(const ProductVector &v, const CMatrix &iso) { return ProductVector(v.e(), iso * v.f()); }

SeparabilityCertificate lift(const SeparabilityCertificate &cert, const CMatrix &iso) {
    SeparabilityCertificate out;
    for (const CertificateTerm &t : cert.terms) out.terms.push_back({t.weight, lift(t.vector, iso)});
    return out;
}

CMatrix qubit_lift(const CMatrix &iso) {
    CMatrix w = CMatrix::Zero(2 * iso.rows(), 2 * iso.cols());
    w.topLeftCorner(iso.rows(), iso.cols()) = iso;
    w.bottomRightCorner(iso.rows(), iso.cols()) = iso;
    return w;
}

// (e^dagger (x) I) X (e (x) I) for a 2n x 2n operator X.
CMatrix contract(const CMatrix &x, const CVector &e, Index n) {
    CMatrix out = CMatrix::Zero(n, n);
    for (Index i = 0; i < 2; ++i) {
        for (Index j = 0; j < 2; ++j) out += std::conj(e(i)) * e(j) * x.block(i * n, j * n, n, n);
    }
    return out;
}

// Smallest eigenvalues left in rho and rho^TA by subtracting min(l0, l0bar) |v><v|,
// to first order, in units of the rank cutoff. The side that attains the
// minimum reads zero.
std::pair<double, double> leftovers(const DensityState &rho, const ProductVector &v, double l0, double l0bar) {
    const double lambda = std::min(l0, l0bar);
    const double cutoff = std::max(rho.tolerances().rank_rel_tol * rho.norm(), 1e-300);
    auto left = [&](const CMatrix &pinv, const CVector &x, double bound) {
        if (!(bound > lambda)) return 0.0;
        return (1.0 / lambda - 1.0 / bound) / (pinv * x).squaredNorm() / cutoff;
    };
    return {left(rho.pseudoinverse(), v.vector(), l0), left(rho.pt_pseudoinverse(), v.conj_partner().vector(), l0bar)};
}

// A side whose leftover eigenvalue falls under the rank cutoff loses a rank.
SubtractionCase classify(const DensityState &rho, const ProductVector &v, double l0, double l0bar) {
    const auto [a, b] = leftovers(rho, v, l0, l0bar);
    if (a <= 1.0 && b <= 1.0) return SubtractionCase::III;
    return a <= 1.0 ? SubtractionCase::I : SubtractionCase::II;
}

bool ambiguous_case(const DensityState &rho, const ProductVector &v, double l0, double l0bar) {
    const auto [a, b] = leftovers(rho, v, l0, l0bar);
    const double m = std::max(a, b);
    return m > 1.0 / kRankCaseMargin && m < kRankCaseMargin;
}

TraceStep make_step(const std::string &tag, int segment, const ProductVector &v, double l0, double l0bar,
                    double lambda, SubtractionCase c, const DensityState &before, const CMatrix &after) {
    TraceStep s;
    s.tag = tag;
    s.segment = segment;
    s.e = v.e();
    s.f = v.f();
    s.lambda0 = l0;
    s.lambda0_bar = l0bar;
    s.lambda = lambda;
    s.declared = c;
    s.rank_before = before.rank();
    s.pt_rank_before = before.pt_rank();
    s.n_before = before.n();
    s.n_after = before.n();
    const ToleranceConfig &tol = before.tolerances();
    const CMatrix h = hermitian_part(after);
    const CMatrix hp = partial_transpose(h, before.n());
    const HermitianSplit a = hermitian_split(h, tol);
    const HermitianSplit b = hermitian_split(hp, tol);
    // Ranks of the result are read with the cutoff of the input so that a
    // vanishing result counts as rank zero.
    auto count = [&](const HermitianSplit &sp) {
        Index r = 0;
        for (Index i = 0; i < sp.eigenvalues.size(); ++i) {
            if (std::abs(sp.eigenvalues(i)) > tol.rank_rel_tol * before.norm()) ++r;
        }
        return r;
    };
    s.rank_after = count(a);
    s.pt_rank_after = count(b);
    const double scale = std::max(before.norm(), 1e-300);
    s.min_eig_after = a.min_eigenvalue() / scale;
    s.pt_min_eig_after = b.min_eigenvalue() / scale;
    return s;
}

void push_step(ReductionTrace *trace, TraceStep step) {
    if (trace) trace->steps.push_back(std::move(step));
}

int new_segment(ReductionTrace *trace) { return trace ? trace->next_segment++ : 0; }

bool negligible(const CMatrix &m, double reference) { return operator_norm(m) <= 1e-12 * reference; }

SeparabilityCertificate decompose_rank_n_impl(const DensityState &rho, ReductionTrace *trace, int segment) {
    StrippedState cur = strip_support(rho);
    CMatrix iso = cur.isometry;
    if (cur.state.rank() != cur.state.n()) {
        throw Error(ErrorCode::PreconditionViolation, "decompose_rank_n: rank differs from support dimension");
    }
    SeparabilityCertificate cert;
    while (cur.state.n() > 1) {
        const ProductSearch ks = kernel_product_vectors(cur.state);
        if (ks.vectors.empty()) throw Error(ErrorCode::NonGenericInput, "no product vector in the kernel");
        const ProductVector *best = nullptr;
        double best_score = -1.0;
        for (const ProductVector &v : ks.vectors) {
            const CVector x = kron(v.e_orthogonal(), v.f());
            const double score = x.dot(cur.state.matrix() * x).real();
            if (score > best_score) {
                best_score = score;
                best = &v;
            }
        }
        KernelReduction red = reduce_by_kernel(cur.state, *best);
        red.step.segment = segment;
        push_step(trace, red.step);
        cert.terms.push_back({red.lambda, lift(red.subtracted, iso)});
        iso = iso * red.reduced.isometry;
        cur.state = red.reduced.state;
    }
    const HermitianSplit &sp = cur.state.spectrum();
    const Index top = sp.eigenvalues.size() - 1;
    const double weight = sp.eigenvalues(top);
    const ProductVector v(sp.eigenvectors.col(top), CVector::Ones(1));
    const CMatrix rest = cur.state.matrix() - weight * v.projector();
    push_step(trace, make_step("final-term", segment, v, weight, weight, weight, SubtractionCase::III, cur.state, rest));
    if (trace) trace->steps.back().n_after = 0;
    cert.terms.push_back({weight, lift(v, iso)});
    return cert;
}

struct Candidate {
    ProductVector v;
    double score;
};

// Lowest eigenvector of h. With rng set, a degenerate lowest eigenspace yields a
// random unit vector inside it rather than the solver's arbitrary basis vector.
CVector lowest_eigenvector(const CMatrix &h, std::mt19937_64 *rng) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(h));
    const RVector &ev = es.eigenvalues();
    Index mult = 1;
    const double spread = 1e-9 * std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
    while (mult < ev.size() && ev(mult) - ev(0) <= spread) ++mult;
    if (!rng || mult == 1) return es.eigenvectors().col(0);
    std::normal_distribution<double> g(0.0, 1.0);
    CVector c(mult);
    for (Index i = 0; i < mult; ++i) c(i) = Complex(g(*rng), g(*rng));
    return es.eigenvectors().leftCols(mult) * c.normalized();
}

// Best unit f in span(nb) for the product e (x) f: maximizes min(lambda_0, bar lambda_0).
std::optional<Candidate> best_in_null_space(const DensityState &rho, const CMatrix &nb, const CVector &e,
                                            bool use_pt, std::mt19937_64 *rng = nullptr) {
    if (nb.cols() == 0) return std::nullopt;
    const Index n = rho.n();
    const CMatrix h1 = nb.adjoint() * contract(rho.pseudoinverse(), e, n) * nb;
    CMatrix h2 = h1;
    if (use_pt) h2 = nb.adjoint() * contract(rho.pt_pseudoinverse(), CVector(e.conjugate()), n) * nb;
    std::vector<CVector> ys;
    for (const CMatrix &h : {h1, h2, CMatrix(h1 + h2)}) ys.push_back(lowest_eigenvector(h, rng));
    std::optional<Candidate> best;
    for (const CVector &y : ys) {
        const double q1 = y.dot(h1 * y).real();
        const double q2 = y.dot(h2 * y).real();
        if (!(q1 > 0.0) || !(q2 > 0.0)) continue;
        const double l0 = 1.0 / q1;
        const double l0bar = 1.0 / q2;
        const ProductVector v(e, nb * y);
        if (use_pt && ambiguous_case(rho, v, l0, l0bar)) continue;
        const double score = std::min(l0, l0bar);
        if (!best || score > best->score) best = Candidate{v, score};
    }
    return best;
}

CVector e_of(Complex alpha) {
    CVector e(2);
    e << alpha, 1.0;
    return e / e.norm();
}

ProductVector choose_real_vector(const DensityState &rho, std::uint64_t seed) {
    const ToleranceConfig &tol = rho.tolerances();
    const Index n = rho.n();
    const ConstraintSystem sys = ConstraintSystem::from_subspace(rho.range(), n, tol);
    // Random alphas come first and later candidates must win clearly, so
    // exact ties (as for multiples of the identity) resolve generically.
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> alphas;
    for (int i = 0; i < 8; ++i) alphas.push_back(g(rng));
    for (double a : {0.0, 1.0, -1.0, 2.0, -2.0, 0.5, -0.5}) alphas.push_back(a);
    std::optional<Candidate> best;
    auto better = [&best](const std::optional<Candidate> &c) {
        return c && (!best || c->score > best->score * (1.0 + 1e-9));
    };
    for (double a : alphas) {
        auto c = best_in_null_space(rho, null_space_at(sys, a, tol), e_of(a), false, &rng);
        if (better(c)) best = c;
    }
    {
        const CMatrix inf = sys.infinity_matrix();
        const RankSplit rs = numerical_rank_kernel(inf, tol);
        CVector e0 = CVector::Zero(2);
        e0(0) = 1.0;
        auto c = best_in_null_space(rho, inf.rows() == 0 ? CMatrix(CMatrix::Identity(n, n)) : rs.kernel, e0, false,
                                    &rng);
        if (better(c)) best = c;
    }
    if (!best) throw Error(ErrorCode::NonGenericInput, "no real product vector in the range");
    return best->v;
}

std::optional<ProductVector> choose_sampled_vector(const DensityState &rho,
                                                   const std::vector<ProductVector> &samples) {
    const ToleranceConfig &tol = rho.tolerances();
    const ConstraintSystem sys = ConstraintSystem::from_subspaces(rho.range(), rho.pt_range(), rho.n(), tol);
    std::optional<Candidate> best;
    for (const ProductVector &s : samples) {
        if (s.alpha_infinite()) continue;
        auto c = best_in_null_space(rho, null_space_at(sys, s.alpha(), tol), s.e(), true);
        if (c && (!best || c->score > best->score)) best = c;
    }
    if (!best) return std::nullopt;
    return best->v;
}

}  // namespace

std::pair<double, double> lambda_bounds(const DensityState &rho, const ProductVector &v) {
    if (v.n() != rho.n()) throw Error(ErrorCode::InvalidArgument, "lambda_bounds: dimension mismatch");
    const ToleranceConfig &tol = rho.tolerances();
    const CVector x = v.vector();
    const CVector xs = v.conj_partner().vector();
    if ((rho.kernel().adjoint() * x).norm() > tol.membership_tol) {
        throw Error(ErrorCode::VectorOutsideRange, "vector is not in the range of rho");
    }
    if ((rho.pt_kernel().adjoint() * xs).norm() > tol.membership_tol) {
        throw Error(ErrorCode::VectorOutsideRange, "partner vector is not in the range of rho^TA");
    }
    const double q = x.dot(rho.pseudoinverse() * x).real();
    const double qb = xs.dot(rho.pt_pseudoinverse() * xs).real();
    if (!(q > 0.0) || !(qb > 0.0)) throw Error(ErrorCode::VectorOutsideRange, "degenerate lambda bound");
    return {1.0 / q, 1.0 / qb};
}

Subtraction subtract(const DensityState &rho, const ProductVector &v) {
    const auto [l0, l0bar] = lambda_bounds(rho, v);
    Subtraction out;
    out.lambda0 = l0;
    out.lambda0_bar = l0bar;
    out.lambda = std::min(l0, l0bar);
    out.declared = classify(rho, v, l0, l0bar);
    out.matrix = rho.matrix() - out.lambda * v.projector();
    return out;
}

StrippedState strip_support(const DensityState &rho) {
    const Index n = rho.n();
    const HermitianSplit sp = hermitian_split(partial_trace_qubit(rho.matrix(), n), rho.tolerances());
    if (sp.rank == n) return {rho, CMatrix::Identity(n, n)};
    const CMatrix iso = sp.range;
    const CMatrix w = qubit_lift(iso);
    return {DensityState(w.adjoint() * rho.matrix() * w, iso.cols(), rho.tolerances()), iso};
}

KernelReduction reduce_by_kernel(const DensityState &rho, const ProductVector &kernel_vector) {
    const Index n = rho.n();
    if (n < 2) throw Error(ErrorCode::PreconditionViolation, "reduce_by_kernel: needs n >= 2");
    const ToleranceConfig &tol = rho.tolerances();
    const CVector ehat = kernel_vector.e_orthogonal();
    const CVector f = kernel_vector.f();
    const CVector w = rho.matrix() * kron(ehat, f);
    if (w.norm() <= tol.membership_tol * rho.norm()) {
        throw Error(ErrorCode::SupportViolation, "rho annihilates |e_hat, f>; strip the support first");
    }
    const CVector g = std::conj(ehat(0)) * w.head(n) + std::conj(ehat(1)) * w.tail(n);
    const double gf = g.dot(f).real();
    const double lambda = g.squaredNorm() / gf;
    const ProductVector u(ehat, g);
    double l0 = lambda;
    double l0bar = lambda;
    try {
        std::tie(l0, l0bar) = lambda_bounds(rho, u);
    } catch (const Error &) {
    }
    const CMatrix rest = rho.matrix() - lambda * u.projector();
    TraceStep step = make_step("kernel-reduction", 0, u, l0, l0bar, lambda, SubtractionCase::III, rho, rest);
    const DensityState next(hermitian_part(rest), n, tol);
    StrippedState reduced = strip_support(next);
    step.n_after = reduced.state.n();
    return {std::move(reduced), u, lambda, std::move(step)};
}

SeparabilityCertificate decompose_rank_n(const DensityState &rho, ReductionTrace *trace) {
    return decompose_rank_n_impl(rho, trace, new_segment(trace));
}

Verdict biorthogonal_check(const DensityState &rho, const std::vector<ProductVector> &vectors) {
    const ToleranceConfig &tol = rho.tolerances();
    const Index n = rho.n();
    const CMatrix &u = rho.range();
    const Index r = u.cols();
    const Index l = static_cast<Index>(vectors.size());
    CMatrix pm(r * r, l);
    for (Index i = 0; i < l; ++i) {
        const ProductVector &v = vectors[static_cast<std::size_t>(i)];
        if (v.n() != n) throw Error(ErrorCode::InvalidArgument, "biorthogonal_check: dimension mismatch");
        const CVector x = v.vector();
        if ((rho.kernel().adjoint() * x).norm() > tol.membership_tol) {
            throw Error(ErrorCode::VectorOutsideRange, "biorthogonal_check: vector outside the range");
        }
        const CVector c = u.adjoint() * x;
        const CMatrix p = c * c.adjoint();
        pm.col(i) = Eigen::Map<const CVector>(p.data(), r * r);
    }
    if (l > 0 && numerical_rank_kernel(pm, tol).rank < l) {
        throw Error(ErrorCode::DependentProjectors, "projectors are linearly dependent");
    }
    const CMatrix target_m = u.adjoint() * rho.matrix() * u;
    const CVector target = Eigen::Map<const CVector>(target_m.data(), r * r);
    CVector coef = CVector::Zero(l);
    if (l > 0) coef = pm.completeOrthogonalDecomposition().solve(target);
    const double residual = (target - pm * coef).norm();
    const double ctol = tol.cert_recon_tol * rho.norm();

    Witness wit;
    wit.residual_outside_span = residual;
    for (Index i = 0; i < l; ++i) {
        wit.coefficients.push_back(coef(i).real());
        if (coef(i).real() < -ctol) wit.violating.push_back(static_cast<std::size_t>(i));
    }
    const bool outside = residual > tol.cert_recon_tol * target_m.norm();
    if (wit.violating.empty() && !outside) {
        SeparabilityCertificate cert;
        for (Index i = 0; i < l; ++i) {
            if (coef(i).real() > ctol) cert.terms.push_back({coef(i).real(), vectors[static_cast<std::size_t>(i)]});
        }
        if (verify_certificate(rho, cert)) return Verdict::separable(std::move(cert));
        return Verdict::inconclusive(InconclusiveReason::NonGenericInput,
                                     "expansion coefficients do not reconstruct the state");
    }
    Verdict v;
    v.kind = VerdictKind::EntangledPPT;
    v.witness = std::move(wit);
    v.detail = outside ? "state has a component outside the span of the product projectors"
                       : "negative expansion coefficient";
    return v;
}

SeparabilityCertificate pt_invariant_decompose(const DensityState &rho, ReductionTrace *trace, std::uint64_t seed) {
    if (!rho.is_pt_invariant(kPtInvariantTol)) {
        throw Error(ErrorCode::PreconditionViolation, "pt_invariant_decompose: state differs from its partial transpose");
    }
    const ToleranceConfig &tol = rho.tolerances();
    const int segment = new_segment(trace);
    const double reference = rho.norm();
    CMatrix cur = 0.5 * (rho.matrix() + rho.pt_matrix());
    Index n = rho.n();
    CMatrix iso = CMatrix::Identity(n, n);
    SeparabilityCertificate cert;
    for (int guard = 0; guard < 8 * static_cast<int>(rho.n()) + 8; ++guard) {
        if (negligible(cur, reference)) return cert;
        const StrippedState st = strip_support(DensityState(cur, n, tol));
        iso = iso * st.isometry;
        const DensityState &s = st.state;
        n = s.n();
        if (s.rank() == n) {
            cert.append(lift(decompose_rank_n_impl(s, trace, segment), iso));
            return cert;
        }
        if (s.rank() < n) throw Error(ErrorCode::NonGenericInput, "rank fell below the support dimension");
        const ProductVector v = choose_real_vector(s, seed + static_cast<std::uint64_t>(guard));
        const Subtraction sub = subtract(s, v);
        push_step(trace, make_step("real-product-subtraction", segment, v, sub.lambda0, sub.lambda0_bar, sub.lambda,
                                   sub.declared, s, sub.matrix));
        cert.terms.push_back({sub.lambda, lift(v, iso)});
        const CMatrix h = hermitian_part(sub.matrix);
        cur = 0.5 * (h + partial_transpose(h, n));
    }
    throw Error(ErrorCode::NonGenericInput, "pt_invariant_decompose: no convergence");
}

std::optional<SeparabilityCertificate> symmetric_part_check(const DensityState &rho, const std::vector<double> &a,
                                                            ReductionTrace *trace) {
    const Index n = rho.n();
    const ToleranceConfig &tol = rho.tolerances();
    std::vector<double> scale = a;
    if (scale.empty()) scale.assign(static_cast<std::size_t>(n), 1.0);
    if (static_cast<Index>(scale.size()) != n) {
        throw Error(ErrorCode::InvalidArgument, "symmetric_part_check: need one scale per eigenvector");
    }
    for (double s : scale) {
        if (!(s > 0.0) || !std::isfinite(s)) throw Error(ErrorCode::InvalidArgument, "scales must be positive");
    }
    const CMatrix &m = rho.matrix();
    const CMatrix rho_s = 0.5 * (m + rho.pt_matrix());
    const CMatrix d = m.block(0, n, n, n) - m.block(n, 0, n, n);
    const CMatrix b = hermitian_part(Complex(0.0, -0.5) * d);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(b);
    CMatrix c = CMatrix::Zero(2 * n, 2 * n);
    for (Index i = 0; i < n; ++i) {
        const double lam = std::abs(es.eigenvalues()(i));
        const double ai = scale[static_cast<std::size_t>(i)];
        const CMatrix vv = es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
        c.block(0, 0, n, n) += lam * ai * ai * vv;
        c.block(n, n, n, n) += lam / (ai * ai) * vv;
    }
    try {
        if (!psd_difference_check(rho_s, c, tol)) return std::nullopt;
    } catch (const Error &) {
        return std::nullopt;
    }
    SeparabilityCertificate cert;
    const CMatrix rest = hermitian_part(rho_s - c);
    try {
        if (!negligible(rest, rho.norm())) {
            cert = pt_invariant_decompose(DensityState(rest, n, tol), trace);
        }
    } catch (const Error &) {
        return std::nullopt;
    }
    for (Index i = 0; i < n; ++i) {
        const double lam = es.eigenvalues()(i);
        if (std::abs(lam) <= 1e-15 * rho.norm()) continue;
        const double ai = scale[static_cast<std::size_t>(i)];
        CVector w(2);
        w << ai, Complex(0.0, -(lam > 0.0 ? 1.0 : -1.0) / ai);
        cert.terms.push_back({std::abs(lam) * w.squaredNorm(), ProductVector(w, es.eigenvectors().col(i))});
    }
    if (!verify_certificate(rho, cert)) return std::nullopt;
    return cert;
}

std::vector<CMatrix> default_local_filters(std::uint64_t seed) {
    std::vector<CMatrix> out;
    for (int k = 0; k < 16; ++k) {
        CMatrix a = CMatrix::Identity(2, 2);
        a(1, 1) = std::polar(1.0, 2.0 * std::numbers::pi * k / 16.0);
        out.push_back(a);
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    while (out.size() < 66) {
        CMatrix a(2, 2);
        for (Index i = 0; i < 4; ++i) a(i % 2, i / 2) = Complex(g(rng), g(rng));
        if (std::abs(a.determinant()) > 1e-3) out.push_back(a);
    }
    return out;
}

std::optional<SeparabilityCertificate> local_filter_search(const DensityState &rho,
                                                           const std::vector<CMatrix> &candidates,
                                                           ReductionTrace *trace) {
    const Index n = rho.n();
    const ToleranceConfig &tol = rho.tolerances();
    for (const CMatrix &a : candidates) {
        if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorCode::InvalidArgument, "filters must be 2x2");
        const Complex det = a.determinant();
        if (std::abs(det) <= 1e-12 * a.squaredNorm()) continue;
        CMatrix w = CMatrix::Zero(2 * n, 2 * n);
        for (Index i = 0; i < 2; ++i) {
            for (Index j = 0; j < 2; ++j) w.block(i * n, j * n, n, n) = a(i, j) * CMatrix::Identity(n, n);
        }
        const CMatrix sigma = hermitian_part(w * rho.matrix() * w.adjoint());
        if (operator_norm(sigma - partial_transpose(sigma, n)) > kPtInvariantTol * operator_norm(sigma)) continue;
        try {
            const SeparabilityCertificate inner = pt_invariant_decompose(DensityState(sigma, n, tol), trace);
            const CMatrix ainv = a.inverse();
            SeparabilityCertificate cert;
            for (const CertificateTerm &t : inner.terms) {
                const CVector e = ainv * t.vector.e();
                cert.terms.push_back({t.weight * e.squaredNorm(), ProductVector(e, t.vector.f())});
            }
            if (verify_certificate(rho, cert)) return cert;
        } catch (const Error &) {
        }
    }
    return std::nullopt;
}

namespace {

struct Chain {
    DensityState state;
    CMatrix iso;
    SeparabilityCertificate terms;
};

void record_decision(ReductionTrace &trace, const DensityState &s) {
    trace.decision_rank = s.rank();
    trace.decision_pt_rank = s.pt_rank();
    trace.decision_n = s.n();
}

// Runs kernel reductions while rho has rank above its support dimension and
// a product vector in its kernel.
void kernel_stage(Chain &chain, ReductionTrace &trace, int segment, std::uint64_t seed) {
    while (chain.state.rank() > chain.state.n() && chain.state.n() >= 2) {
        const ProductSearch ks = kernel_product_vectors(chain.state, seed);
        if (ks.vectors.empty()) return;
        const ProductVector *best = nullptr;
        double best_score = -1.0;
        for (const ProductVector &v : ks.vectors) {
            const CVector x = kron(v.e_orthogonal(), v.f());
            const double score = x.dot(chain.state.matrix() * x).real();
            if (score > best_score) {
                best_score = score;
                best = &v;
            }
        }
        KernelReduction red = reduce_by_kernel(chain.state, *best);
        red.step.segment = segment;
        trace.steps.push_back(red.step);
        chain.terms.terms.push_back({red.lambda, lift(red.subtracted, chain.iso)});
        chain.iso = chain.iso * red.reduced.isometry;
        chain.state = red.reduced.state;
    }
}

Verdict finish_separable(const DensityState &input, SeparabilityCertificate cert, ReductionTrace &trace) {
    if (verify_certificate(input, cert)) return Verdict::separable(std::move(cert));
    trace.warnings.push_back("assembled certificate failed verification");
    return Verdict::inconclusive(InconclusiveReason::ReductionStalled, "certificate failed verification");
}

}  // namespace

namespace {

struct ChainOutcome {
    std::optional<Verdict> verdict;
    InconclusiveReason reason = InconclusiveReason::ReductionStalled;
    std::string detail;
    /// The chain hit a dead end after a sampled subtraction.
    bool retry = false;
};

bool generic_failure(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonGenericInput:
        case ErrorCode::DegenerateElimination:
        case ErrorCode::DependentProjectors:
        case ErrorCode::VectorOutsideRange:
        case ErrorCode::SupportViolation:
        case ErrorCode::PreconditionViolation:
        case ErrorCode::NotPsd:
            return true;
        default:
            return false;
    }
}

ChainOutcome run_chain(const DensityState &input, Chain chain, ReductionTrace &trace, int segment,
                       std::uint64_t seed, std::optional<Chain> &before_sampling) {
    const ToleranceConfig &tol = input.tolerances();
    ChainOutcome res;
    bool sampled = false;
    try {
        for (std::uint64_t round = 0;; ++round) {
            kernel_stage(chain, trace, segment, seed);
            if (!before_sampling) before_sampling = chain;
            const DensityState &s = chain.state;
            const Index n = s.n();
            if (s.rank() < n) {
                record_decision(trace, s);
                throw Error(ErrorCode::NonGenericInput, "rank below the support dimension");
            }
            if (s.rank() == n) {
                record_decision(trace, s);
                SeparabilityCertificate cert = chain.terms;
                cert.append(lift(decompose_rank_n_impl(s, &trace, segment), chain.iso));
                res.verdict = finish_separable(input, std::move(cert), trace);
                return res;
            }

            const ProductSearch found = paired_products(s.range(), s.pt_range(), n, tol, seed + round);
            if (found.infinite_family) {
                const std::optional<ProductVector> pick = choose_sampled_vector(s, found.vectors);
                if (!pick) {
                    record_decision(trace, s);
                    res.reason = InconclusiveReason::InfiniteFamilyUnresolved;
                    res.detail = "no subtractable sample in the infinite product family";
                    res.retry = sampled;
                    return res;
                }
                const Subtraction sub = subtract(s, *pick);
                trace.steps.push_back(make_step("sampled-subtraction", segment, *pick, sub.lambda0, sub.lambda0_bar,
                                                sub.lambda, sub.declared, s, sub.matrix));
                trace.sampled_subtraction = true;
                sampled = true;
                chain.terms.terms.push_back({sub.lambda, lift(*pick, chain.iso)});
                if (negligible(sub.matrix, input.norm())) {
                    record_decision(trace, s);
                    res.verdict = finish_separable(input, chain.terms, trace);
                    return res;
                }
                const StrippedState next = strip_support(DensityState(hermitian_part(sub.matrix), n, tol));
                chain.iso = chain.iso * next.isometry;
                chain.state = next.state;
                continue;
            }

            record_decision(trace, s);
            trace.eliminant_degree = found.eliminant_degree;
            trace.enumerated_vectors = found.vectors.size();
            std::mt19937_64 rng(seed);
            std::normal_distribution<double> g(0.0, 1.0);
            CVector e(2);
            e << Complex(g(rng), g(rng)), Complex(g(rng), g(rng));
            e.normalize();
            if (!kernel_slice_independence(s, e) ||
                !kernel_slice_independence(partial_transpose(s), CVector(e.conjugate()))) {
                res.reason = InconclusiveReason::NonGenericInput;
                res.detail = "kernel slices are linearly dependent";
                res.retry = sampled;
                return res;
            }
            trace.exhaustive = found.exhaustive;
            const Verdict bi = biorthogonal_check(s, found.vectors);
            if (bi.kind == VerdictKind::Separable) {
                SeparabilityCertificate cert = chain.terms;
                cert.append(lift(*bi.certificate, chain.iso));
                Verdict v = finish_separable(input, std::move(cert), trace);
                if (v.kind == VerdictKind::Separable) {
                    res.verdict = std::move(v);
                    return res;
                }
                res.detail = v.detail;
            } else if (bi.kind == VerdictKind::EntangledPPT) {
                if (trace.exhaustive && !trace.sampled_subtraction) {
                    res.verdict = bi;
                    return res;
                }
                res.detail = "residual after sampled subtractions is not separable";
            } else {
                res.reason = bi.reason;
                res.detail = bi.detail;
            }
            res.retry = sampled;
            return res;
        }
    } catch (const Error &err) {
        if (!generic_failure(err.code())) throw;
        res.reason = InconclusiveReason::NonGenericInput;
        res.detail = err.what();
        res.retry = sampled;
    }
    return res;
}

}  // namespace

Analysis analyze(const DensityState &rho, const AnalyzeOptions &options) {
    Analysis out;
    ReductionTrace &trace = out.trace;
    if (rho.borderline()) trace.warnings.push_back("a singular value lies within a factor of ten of the rank cutoff");

    if (!rho.is_ppt()) {
        record_decision(trace, rho);
        out.verdict.kind = VerdictKind::EntangledNPT;
        out.verdict.detail = "partial transpose has a negative eigenvalue";
        return out;
    }

    const StrippedState st = strip_support(rho);
    std::optional<Chain> base;
    ChainOutcome res = run_chain(rho, Chain{st.state, st.isometry, {}}, trace, new_segment(&trace), options.seed, base);
    for (int attempt = 1; res.retry && base && attempt < options.sampling_attempts; ++attempt) {
        const std::uint64_t seed = options.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt);
        res = run_chain(rho, *base, trace, new_segment(&trace), seed, base);
    }
    if (res.verdict) {
        out.verdict = std::move(*res.verdict);
        return out;
    }

    if (options.use_fallbacks && base) {
        if (auto cert = symmetric_part_check(base->state, {}, &trace)) {
            record_decision(trace, base->state);
            SeparabilityCertificate full = base->terms;
            full.append(lift(*cert, base->iso));
            out.verdict = finish_separable(rho, std::move(full), trace);
            if (out.verdict.kind == VerdictKind::Separable) return out;
        }
        const std::vector<CMatrix> filters =
            options.local_filters.empty() ? default_local_filters(options.seed) : options.local_filters;
        if (auto cert = local_filter_search(base->state, filters, &trace)) {
            record_decision(trace, base->state);
            SeparabilityCertificate full = base->terms;
            full.append(lift(*cert, base->iso));
            out.verdict = finish_separable(rho, std::move(full), trace);
            if (out.verdict.kind == VerdictKind::Separable) return out;
        }
    }
    out.verdict = Verdict::inconclusive(res.reason, res.detail);
    return out;
}

}  // namespace sep2xn
