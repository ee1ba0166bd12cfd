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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sep2xn/polynomial.hpp"

namespace sep2xn {

/// 2^(X-1) [X + Y (Y - X + 1)] with the smaller degree as X.
std::size_t single_root_bound(Index deg_alpha, Index deg_conj);

/// 2^X Y with the smaller degree as X.
std::size_t pair_root_bound(Index deg_alpha, Index deg_conj);

/// Univariate Q(alpha) whose roots include every solution of
/// P(alpha, conj alpha) = 0. alpha and beta are exchanged first when
/// deg_alpha > deg_conj. A self-conjugate P (conj_poly proportional to P)
/// is handled through the critical points of the real function it defines;
/// if that function changes sign the solution set is a curve and
/// DegenerateElimination is thrown, as it is whenever a round of elimination
/// cancels completely.
UnivariatePoly eliminate_single(const BivariatePoly &p);

/// Univariate Q(alpha) whose roots include every common solution of
/// P = 0 and P2 = 0 on the slice beta = conj alpha.
UnivariatePoly eliminate_pair(const BivariatePoly &p, const BivariatePoly &p2);

/// True if conj_poly(p) = c p for some unimodular c, which is stored in *c.
bool is_self_conjugate(const BivariatePoly &p, Complex *c = nullptr);

/// Points of the real curve P(alpha, conj alpha) = 0 of a self-conjugate P,
/// found as the real roots of P restricted to `lines` random lines through
/// the plane. Empty if P is not self-conjugate.
std::vector<Complex> real_curve_points(const BivariatePoly &p, std::uint64_t seed, int lines = 8);

struct SolveReport {
    RootSet roots;
    /// Degree of the univariate polynomial whose roots were the candidates.
    Index eliminant_degree = 0;
    /// Candidates before refinement and verification.
    std::vector<Complex> candidates;
};

/// eliminate_single, univariate_roots, refine_root and verify_roots chained.
/// The eigenvalues of the Sylvester matrix of P and its conjugate, taken as
/// polynomials in beta, join the candidates; they are better conditioned than
/// the roots of a high-degree eliminant. DegenerateElimination is reported
/// through roots.degenerate.
SolveReport solve_single(const BivariatePoly &p, const ToleranceConfig &tol);

/// Common roots of several polynomials. The first polynomial is eliminated
/// against each of the others and the resulting univariate polynomials are
/// combined by cancelling leading terms, which lowers the degree by one for
/// every extra equation. Sylvester eigenvalues of the first few pairs join the
/// candidates, which are verified against the whole system.
SolveReport solve_system(const std::vector<BivariatePoly> &system, const ToleranceConfig &tol);

}  // namespace sep2xn
