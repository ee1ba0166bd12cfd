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

#include <cstdint>
#include <optional>
#include <vector>

#include "sep2xn/density_state.hpp"
#include "sep2xn/polynomial.hpp"
#include "sep2xn/product_vector.hpp"

namespace sep2xn {

inline constexpr std::uint64_t kDefaultFinderSeed = 0x5eed2a11u;

/// Linear conditions for |e,f> in H1 and |e*,f> in H2 with e = (alpha, 1).
/// Each orthocomplement vector psi = (a; b) of H1 contributes the row
/// alpha a^dagger + b^dagger; H2 contributes conj(alpha) a^dagger + b^dagger.
struct ConstraintSystem {
    Index n = 0;
    CMatrix a1, b1;
    CMatrix a2, b2;

    /// H2 may have zero columns to mean "no second condition".
    static ConstraintSystem from_subspaces(const CMatrix &h1, const CMatrix &h2, Index n, const ToleranceConfig &tol);
    /// Single-subspace system: only the H1 rows.
    static ConstraintSystem from_subspace(const CMatrix &h, Index n, const ToleranceConfig &tol);

    Index rows1() const { return a1.rows(); }
    Index rows2() const { return a2.rows(); }

    /// Rows evaluated at alpha for H1 and beta for H2.
    CMatrix matrix(Complex alpha, Complex beta) const;
    CMatrix matrix(Complex alpha) const { return matrix(alpha, std::conj(alpha)); }
    /// Rows for e = |0>, where both alpha and beta are infinite.
    CMatrix infinity_matrix() const;

    /// Determinant polynomials of N x N row selections. The larger block of
    /// rows is kept in every selection (the H2 block on a tie) and completed
    /// by every choice of rows from the other block. When the kept block has
    /// N or more rows, a single determinant of a random N-row combination of
    /// all rows is returned instead. Coefficients come from interpolation on
    /// roots of unity.
    std::vector<BivariatePoly> determinants(std::uint64_t seed = kDefaultFinderSeed) const;
};

/// det(alpha A + beta B + C) for square A, B, C as a bivariate polynomial of
/// degree at most deg_alpha and deg_beta, recovered by interpolation on
/// roots of unity.
BivariatePoly determinant_poly(const CMatrix &a, const CMatrix &b, const CMatrix &c, Index deg_alpha,
                               Index deg_beta);

struct ProductSearch {
    std::vector<ProductVector> vectors;
    /// Every alpha admits a solution; vectors then holds samples only.
    bool infinite_family = false;
    /// vectors is the complete finite solution set.
    bool exhaustive = false;
    /// Degree of the univariate polynomial whose roots were searched, -1 if none.
    Index eliminant_degree = -1;
    std::size_t determinant_count = 0;
};

/// Product vectors in span(h). dim > n gives an infinite family with eight
/// samples (four random complex alpha, four real alpha).
ProductSearch products_in_subspace(const CMatrix &h, Index n, const ToleranceConfig &tol,
                                   std::uint64_t seed = kDefaultFinderSeed);

/// Vectors with |e,f> in span(h1) and |e*,f> in span(h2). When a
/// self-conjugate determinant vanishes on a real curve, points of the curve
/// are returned as an infinite family. Throws NonGenericInput if elimination
/// degenerates otherwise or a null space at a root has dimension above one.
ProductSearch paired_products(const CMatrix &h1, const CMatrix &h2, Index n, const ToleranceConfig &tol,
                              std::uint64_t seed = kDefaultFinderSeed);

/// Product vectors with real alpha (so e = e*) in span(h), including
/// alpha = infinity. Requires dim h > n.
std::vector<ProductVector> real_e_products(const CMatrix &h, Index n, const ToleranceConfig &tol,
                                           std::uint64_t seed = kDefaultFinderSeed);

/// Product vectors in K(rho) that also satisfy rho^TA |e*,f> = 0.
ProductSearch kernel_product_vectors(const DensityState &rho, std::uint64_t seed = kDefaultFinderSeed);

/// First vector of kernel_product_vectors, if any.
std::optional<ProductVector> kernel_product_vector(const DensityState &rho, std::uint64_t seed = kDefaultFinderSeed);

/// True iff the slices <e|psi_i> of the kernel basis of rho are linearly
/// independent in C^n. Vacuously true for a trivial kernel.
bool kernel_slice_independence(const DensityState &rho, const CVector &e);

/// Orthonormal basis of {f : M(alpha, conj alpha) f = 0} for the stacked system.
CMatrix null_space_at(const ConstraintSystem &sys, Complex alpha, const ToleranceConfig &tol);

/// ||(I - P_H) v|| for an orthonormal basis h.
double subspace_residual(const CMatrix &h, const CVector &v);

}  // namespace sep2xn
