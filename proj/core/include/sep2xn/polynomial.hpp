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
#include <vector>

#include "sep2xn/linalg.hpp"

namespace sep2xn {

/// Polynomial in alpha and beta = alpha* with complex coefficients.
/// coeffs(j, k) multiplies alpha^j beta^k. Trailing rows and columns whose
/// entries are all below kCoefficientTrimTol relative to the largest
/// coefficient are trimmed on construction, so the degrees are tight.
class BivariatePoly {
  public:
    BivariatePoly();
    explicit BivariatePoly(CMatrix coeffs);

    /// c * alpha^j * beta^k.
    static BivariatePoly monomial(Index j, Index k, Complex c = 1.0);

    const CMatrix &coeffs() const { return c_; }
    Index deg_alpha() const { return c_.rows() - 1; }
    Index deg_conj() const { return c_.cols() - 1; }
    bool is_zero() const;
    double max_abs() const;

    /// Treats alpha and beta as independent.
    Complex operator()(Complex alpha, Complex beta) const;
    /// Value on the real slice beta = conj(alpha).
    Complex on_conj(Complex alpha) const { return (*this)(alpha, std::conj(alpha)); }
    /// sum |c_jk| max(1, |alpha|)^(j+k); the natural size of P near alpha.
    /// Bounded below by the coefficient sum, so it stays positive at a root at 0.
    double scale_at(Complex alpha) const;

    BivariatePoly d_alpha() const;
    BivariatePoly d_conj() const;
    /// Exchange the roles of alpha and beta without conjugating coefficients.
    BivariatePoly swapped() const;

    friend BivariatePoly operator+(const BivariatePoly &a, const BivariatePoly &b);
    friend BivariatePoly operator-(const BivariatePoly &a, const BivariatePoly &b);
    friend BivariatePoly operator*(const BivariatePoly &a, const BivariatePoly &b);
    friend BivariatePoly operator*(Complex s, const BivariatePoly &a);

  private:
    CMatrix c_;
};

/// conj_poly(j, k) = conj(P(k, j)), so conj_poly(a, conj a) = conj(P(a, conj a)).
BivariatePoly conjugate_poly(const BivariatePoly &p);

/// Complex polynomial in one variable, coefficients in ascending degree.
class UnivariatePoly {
  public:
    UnivariatePoly();
    explicit UnivariatePoly(CVector coeffs);
    /// Monic polynomial with the given roots.
    static UnivariatePoly from_roots(const std::vector<Complex> &roots);

    const CVector &coeffs() const { return c_; }
    Index degree() const { return c_.size() - 1; }
    bool is_zero() const;
    Complex operator()(Complex x) const;
    UnivariatePoly derivative() const;

  private:
    CVector c_;
};

struct RootSet {
    std::vector<Complex> roots;
    /// An infinite family of solutions was detected; roots is then empty.
    bool degenerate = false;
    /// Upper bound on the number of roots that applied to this solve.
    std::size_t bound_used = 0;
};

/// All complex roots with multiplicity: eigenvalues of the companion matrix
/// of a rescaled polynomial, polished by damped Newton steps.
/// Throws InvalidArgument for degree < 1 and NonFinite on overflow.
std::vector<Complex> univariate_roots(const UnivariatePoly &q);

/// Gauss-Newton on the real and imaginary parts of alpha for the system
/// P_i(alpha, conj alpha) = 0. A step is kept only if it lowers the residual.
Complex refine_root(Complex alpha, const std::vector<BivariatePoly> &system, int max_iter = 30);

/// Relative residual max_i |P_i(a, conj a)| / scale_at(P_i, a).
double relative_residual(Complex alpha, const std::vector<BivariatePoly> &system);

/// Keeps candidates whose relative residual is within root_residual_tol for
/// every polynomial, merges candidates closer than merge_radius and sorts by
/// (Re, Im). No refinement is applied.
RootSet verify_roots(const std::vector<Complex> &candidates, const std::vector<BivariatePoly> &system,
                     const ToleranceConfig &tol, std::size_t bound = 0);

/// Lexicographic (Re, Im) order used for every root list.
bool root_less(Complex a, Complex b);

}  // namespace sep2xn
