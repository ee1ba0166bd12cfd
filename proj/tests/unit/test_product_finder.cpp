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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace sep2xn;
using fixture::basis_vector;

namespace {

const Complex kI(0.0, 1.0);

CMatrix columns(std::initializer_list<CVector> vs) {
    CMatrix m(vs.begin()->size(), static_cast<Index>(vs.size()));
    Index c = 0;
    for (const CVector &v : vs) m.col(c++) = v;
    return m;
}

bool has_alpha(const std::vector<ProductVector> &vs, Complex alpha, double tol) {
    return std::any_of(vs.begin(), vs.end(), [&](const ProductVector &v) {
        return !v.alpha_infinite() && std::abs(v.alpha() - alpha) <= tol;
    });
}

bool has_infinity(const std::vector<ProductVector> &vs) {
    return std::any_of(vs.begin(), vs.end(), [](const ProductVector &v) { return v.alpha_infinite(); });
}

double best_overlap(const std::vector<ProductVector> &vs, const ProductVector &target) {
    double best = 0.0;
    for (const ProductVector &v : vs) best = std::max(best, overlap(v, target));
    return best;
}

CMatrix random_subspace(Index n, Index dim, Rng &rng) {
    return fixture::orthonormalize(random_complex_matrix(2 * n, dim, rng));
}

}  // namespace

TEST(ProductsInSubspace, ProductBasisIsFound) {
    const CMatrix h = columns({basis_vector(0, 0, 2), basis_vector(1, 1, 2)});
    const ProductSearch s = products_in_subspace(h, 2, {});
    EXPECT_FALSE(s.infinite_family);
    const ProductVector a(CVector::Unit(2, 0), CVector::Unit(2, 0));
    const ProductVector b(CVector::Unit(2, 1), CVector::Unit(2, 1));
    EXPECT_GT(best_overlap(s.vectors, a), 1.0 - 1e-10);
    EXPECT_GT(best_overlap(s.vectors, b), 1.0 - 1e-10);
}

TEST(ProductsInSubspace, FullSpaceIsInfinite) {
    const ProductSearch s = products_in_subspace(CMatrix::Identity(6, 6), 3, {});
    EXPECT_TRUE(s.infinite_family);
    EXPECT_EQ(s.vectors.size(), 8u);
    for (const ProductVector &v : s.vectors) EXPECT_EQ(v.n(), 3);
}

TEST(ProductsInSubspace, MatchesSegreScan) {
    const double r = 1.0 / std::sqrt(2.0);
    const CMatrix h = columns({CVector(r * (basis_vector(0, 0, 3) + basis_vector(1, 1, 3))),
                               CVector(r * (basis_vector(0, 1, 3) - basis_vector(1, 0, 3))), basis_vector(0, 2, 3)});
    const ProductSearch s = products_in_subspace(h, 3, {});
    ASSERT_FALSE(s.infinite_family);
    const std::vector<Complex> scan = oracle::segre_scan(h, 3);
    ASSERT_EQ(scan.size(), 2u);
    for (Complex a : scan) EXPECT_TRUE(has_alpha(s.vectors, a, 1e-6));
    for (const ProductVector &v : s.vectors) {
        if (!v.alpha_infinite()) {
            EXPECT_TRUE(std::any_of(scan.begin(), scan.end(), [&](Complex a) { return std::abs(a - v.alpha()) < 1e-6; }));
        }
    }
    EXPECT_TRUE(has_alpha(s.vectors, kI, 1e-8));
    EXPECT_TRUE(has_alpha(s.vectors, -kI, 1e-8));
    // |0>|2> is the solution at alpha = infinity.
    EXPECT_TRUE(has_infinity(s.vectors));
}

TEST(ProductsInSubspace, DimensionEqualToNAlwaysHasSolutions) {
    Rng rng(30);
    const ToleranceConfig tol;
    int empty = 0;
    for (int t = 0; t < 200; ++t) {
        const Index n = 2 + t % 4;
        const CMatrix h = random_subspace(n, n, rng);
        const ProductSearch s = products_in_subspace(h, n, tol);
        empty += s.vectors.empty() ? 1 : 0;
        for (const ProductVector &v : s.vectors) EXPECT_LE(subspace_residual(h, v.vector()), tol.membership_tol);
    }
    EXPECT_EQ(empty, 0);
}

TEST(PairedProducts, RecoversGeneratorsOfRankFiveState) {
    Rng rng(31);
    const ToleranceConfig tol;
    for (int t = 0; t < 10; ++t) {
        const GeneratedState g = random_separable(4, 5, rng);
        const DensityState rho(g.matrix, 4);
        ASSERT_EQ(rho.rank(), 5);
        ASSERT_EQ(rho.pt_rank(), 5);
        const ProductSearch s = paired_products(rho.range(), rho.pt_range(), 4, tol);
        ASSERT_FALSE(s.infinite_family);
        EXPECT_LE(s.vectors.size(), 5u);
        for (const ProductVector &gen : g.generators) EXPECT_GT(best_overlap(s.vectors, gen), 1.0 - 1e-8);
    }
}

TEST(PairedProducts, FullSpacesAreInfinite) {
    const ProductSearch s = paired_products(CMatrix::Identity(8, 8), CMatrix::Identity(8, 8), 4, {});
    EXPECT_TRUE(s.infinite_family);
    EXPECT_FALSE(s.exhaustive);
}

TEST(PairedProducts, RankSixDegreeBound) {
    Rng rng(32);
    for (int t = 0; t < 10; ++t) {
        const GeneratedState g = random_separable(4, 6, rng);
        const DensityState rho(g.matrix, 4);
        const ProductSearch s = paired_products(rho.range(), rho.pt_range(), 4, {});
        ASSERT_FALSE(s.infinite_family);
        EXPECT_GE(s.eliminant_degree, 1);
        EXPECT_LE(s.eliminant_degree, 8);
    }
}

TEST(PairedProducts, ThresholdAtThreeN) {
    Rng rng(33);
    const ToleranceConfig tol;
    for (Index n = 2; n <= 5; ++n) {
        for (int t = 0; t < 5; ++t) {
            const Index m1 = (3 * n) / 2;
            const ProductSearch above =
                paired_products(random_subspace(n, m1, rng), random_subspace(n, 3 * n + 1 - m1, rng), n, tol);
            EXPECT_TRUE(above.infinite_family);
            const CMatrix h1 = random_subspace(n, m1, rng);
            const CMatrix h2 = random_subspace(n, 3 * n - m1, rng);
            const ProductSearch at = paired_products(h1, h2, n, tol);
            EXPECT_FALSE(at.infinite_family);
            for (const ProductVector &v : at.vectors) {
                EXPECT_LE(subspace_residual(h1, v.vector()), tol.membership_tol);
                EXPECT_LE(subspace_residual(h2, v.conj_partner().vector()), tol.membership_tol);
            }
        }
    }
}

TEST(PairedProducts, RoundTripRecoversEveryGenerator) {
    Rng rng(34);
    const ToleranceConfig tol;
    const std::pair<Index, Index> shapes[] = {{3, 4}, {4, 5}, {4, 6}, {5, 7}};
    for (const auto &[n, terms] : shapes) {
        for (int t = 0; t < 4; ++t) {
            const GeneratedState g = random_separable(n, terms, rng);
            const DensityState rho(g.matrix, n);
            ASSERT_LE(rho.rank() + rho.pt_rank(), 3 * n);
            const ProductSearch s = paired_products(rho.range(), rho.pt_range(), n, tol);
            ASSERT_FALSE(s.infinite_family);
            for (const ProductVector &gen : g.generators) EXPECT_GT(best_overlap(s.vectors, gen), 1.0 - 1e-8);
            for (const ProductVector &v : s.vectors) {
                EXPECT_LE(subspace_residual(rho.range(), v.vector()), tol.membership_tol);
                EXPECT_LE(subspace_residual(rho.pt_range(), v.conj_partner().vector()), tol.membership_tol);
            }
        }
    }
}

TEST(PairedProducts, GeneratorAtAlphaZeroIsFound) {
    // e = |1> sits at alpha = 0, where determinant polynomials have a
    // vanishing constant term.
    Rng rng(35);
    CVector one = CVector::Zero(2);
    one(1) = 1.0;
    for (int t = 0; t < 5; ++t) {
        const Index n = 3;
        std::vector<ProductVector> gens;
        for (Index i = 0; i < n; ++i) gens.push_back(random_product_vector(n, rng));
        gens.emplace_back(one, random_complex_vector(n, rng));
        const DensityState rho(fixture::sum_of_projectors(gens), n);
        ASSERT_EQ(rho.rank(), n + 1);
        const ProductSearch s = paired_products(rho.range(), rho.pt_range(), n, {});
        ASSERT_TRUE(s.exhaustive);
        for (const ProductVector &gen : gens) EXPECT_GT(best_overlap(s.vectors, gen), 1.0 - 1e-8);
        EXPECT_EQ(analyze(rho).verdict.kind, VerdictKind::Separable);
    }
}

TEST(PairedProducts, TwoQubitRankThreeGivesCurveSamples) {
    // On C^2 (x) C^2 the determinant of a rank-(3,3) system is self-conjugate
    // and vanishes on a curve, so the solutions form a family.
    Rng rng(44);
    const ToleranceConfig tol;
    for (int t = 0; t < 5; ++t) {
        const GeneratedState g = random_separable(2, 3, rng);
        const DensityState rho(g.matrix, 2);
        const ProductSearch s = paired_products(rho.range(), rho.pt_range(), 2, tol);
        EXPECT_TRUE(s.infinite_family);
        EXPECT_FALSE(s.exhaustive);
        EXPECT_FALSE(s.vectors.empty());
        for (const ProductVector &v : s.vectors) {
            EXPECT_LE(subspace_residual(rho.range(), v.vector()), tol.membership_tol);
            EXPECT_LE(subspace_residual(rho.pt_range(), v.conj_partner().vector()), tol.membership_tol);
        }
    }
}

TEST(RealEProducts, FullSpace) {
    const std::vector<ProductVector> vs = real_e_products(CMatrix::Identity(4, 4), 2, {});
    ASSERT_FALSE(vs.empty());
    for (const ProductVector &v : vs) EXPECT_LT((v.e() - v.e().conjugate()).norm(), 1e-12);
}

TEST(RealEProducts, RangeOfPtInvariantState) {
    Rng rng(35);
    for (int t = 0; t < 10; ++t) {
        // rank 3 and PT-invariant: two real-e product terms plus a PT-invariant third.
        CMatrix rho = CMatrix::Zero(4, 4);
        for (int i = 0; i < 3; ++i) {
            CVector e = random_complex_vector(2, rng).real().cast<Complex>();
            rho += ProductVector(e, random_complex_vector(2, rng)).projector();
        }
        const DensityState s(rho, 2);
        ASSERT_EQ(s.rank(), 3);
        ASSERT_TRUE(s.is_pt_invariant(1e-12));
        const std::vector<ProductVector> vs = real_e_products(s.range(), 2, {});
        ASSERT_FALSE(vs.empty());
        for (const ProductVector &v : vs) {
            EXPECT_LT((v.e() - v.e().conjugate()).norm(), 1e-10);
            EXPECT_LE(subspace_residual(s.range(), v.vector()), 1e-7);
        }
    }
}

TEST(RealEProducts, RefusesDimensionN) {
    Rng rng(36);
    try {
        real_e_products(random_subspace(3, 3, rng), 3, {});
        FAIL() << "expected a precondition error";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::PreconditionViolation);
    }
}

TEST(KernelProductVector, RankNStateHasOne) {
    Rng rng(37);
    for (Index n = 2; n <= 5; ++n) {
        const GeneratedState g = random_separable(n, n, rng);
        const DensityState rho(g.matrix, n);
        const std::optional<ProductVector> v = kernel_product_vector(rho);
        ASSERT_TRUE(v.has_value());
        EXPECT_LT((rho.matrix() * v->vector()).norm(), 1e-8 * rho.norm());
        EXPECT_LT((rho.pt_matrix() * v->conj_partner().vector()).norm(), 1e-8 * rho.norm());
    }
}

TEST(KernelProductVector, FullRankHasNone) {
    Rng rng(38);
    const GeneratedState g = random_separable(3, 8, rng);
    EXPECT_FALSE(kernel_product_vector(DensityState(g.matrix, 3)).has_value());
}

TEST(KernelProductVector, GenericRankFiveHasNoneAndScanAgrees) {
    Rng rng(39);
    for (int t = 0; t < 5; ++t) {
        const GeneratedState g = random_separable(4, 5, rng);
        const DensityState rho(g.matrix, 4);
        ASSERT_EQ(rho.kernel().cols(), 3);
        EXPECT_FALSE(kernel_product_vector(rho).has_value());
        EXPECT_TRUE(oracle::segre_scan(rho.kernel(), 4, 3.0, 150).empty());
    }
}

TEST(KernelSliceIndependence, TrivialKernel) {
    Rng rng(40);
    const GeneratedState g = random_separable(3, 8, rng);
    EXPECT_TRUE(kernel_slice_independence(DensityState(g.matrix, 3), random_complex_vector(2, rng)));
}

TEST(KernelSliceIndependence, PlantedKernelVectorBreaksIt) {
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        const GeneratedState g = planted_kernel(4, 4, 1, rng);
        const DensityState rho(g.matrix, 4);
        ASSERT_LT((rho.matrix() * basis_vector(0, 0, 4)).norm(), 1e-12);
        // The planted |0>|0> is annihilated by <1|.
        EXPECT_FALSE(kernel_slice_independence(rho, CVector::Unit(2, 1)));
    }
}

TEST(KernelSliceIndependence, GenericRankFiveRandomE) {
    Rng rng(42);
    for (int t = 0; t < 20; ++t) {
        const GeneratedState g = random_separable(4, 5, rng);
        const DensityState rho(g.matrix, 4);
        const CVector e = random_complex_vector(2, rng);
        EXPECT_TRUE(kernel_slice_independence(rho, e));
        CMatrix slices(4, rho.kernel().cols());
        for (Index c = 0; c < slices.cols(); ++c) {
            slices.col(c) = std::conj(e(0)) * rho.kernel().col(c).head(4) + std::conj(e(1)) * rho.kernel().col(c).tail(4);
        }
        EXPECT_EQ(oracle::rank(CMatrix(slices.adjoint() * slices), 1e-9), rho.kernel().cols());
    }
}

TEST(ConstraintSystem, DeterminantDegreesFollowRowCounts) {
    Rng rng(43);
    const GeneratedState g = random_separable(4, 5, rng);
    const DensityState rho(g.matrix, 4);
    const ConstraintSystem sys = ConstraintSystem::from_subspaces(rho.range(), rho.pt_range(), 4, {});
    EXPECT_EQ(sys.rows1(), 3);
    EXPECT_EQ(sys.rows2(), 3);
    for (const BivariatePoly &p : sys.determinants()) {
        EXPECT_LE(p.deg_alpha(), sys.rows1());
        EXPECT_LE(p.deg_conj(), sys.rows2());
    }
}
