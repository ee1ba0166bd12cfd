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
#include <string>
#include <utility>
#include <vector>

#include "sep2xn/certificate.hpp"
#include "sep2xn/density_state.hpp"
#include "sep2xn/product_finder.hpp"

namespace sep2xn {

enum class VerdictKind { Separable, EntangledNPT, EntangledPPT, Inconclusive };

enum class InconclusiveReason { None, NonGenericInput, InfiniteFamilyUnresolved, ReductionStalled };

std::string to_string(VerdictKind kind);
std::string to_string(InconclusiveReason reason);

/// Expansion data behind an EntangledPPT verdict.
struct Witness {
    /// Coefficients of rho on the projectors of the enumerated vectors.
    std::vector<double> coefficients;
    /// Indices with a coefficient below -tol.
    std::vector<std::size_t> violating;
    /// Norm of the part of rho outside the span of the projectors.
    double residual_outside_span = 0.0;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<SeparabilityCertificate> certificate;
    std::optional<Witness> witness;
    InconclusiveReason reason = InconclusiveReason::None;
    std::string detail;

    static Verdict separable(SeparabilityCertificate cert);
    static Verdict inconclusive(InconclusiveReason reason, std::string detail);
};

/// Rank behaviour of a subtraction: i drops r(rho) only, ii drops r(rho^TA)
/// only, iii drops both.
enum class SubtractionCase { I, II, III };
std::string to_string(SubtractionCase c);

struct TraceStep {
    std::string tag;
    /// Steps of one segment act on successive states of a single reduction chain.
    int segment = 0;
    CVector e;
    CVector f;
    double lambda0 = 0.0;
    double lambda0_bar = 0.0;
    double lambda = 0.0;
    SubtractionCase declared = SubtractionCase::III;
    Index rank_before = 0, pt_rank_before = 0;
    Index rank_after = 0, pt_rank_after = 0;
    Index n_before = 0, n_after = 0;
    /// lambda_min of the result and of its partial transpose over ||rho|| of the input.
    double min_eig_after = 0.0;
    double pt_min_eig_after = 0.0;
};

struct ReductionTrace {
    std::vector<TraceStep> steps;
    /// The final product-vector enumeration was complete and finite.
    bool exhaustive = false;
    /// A subtraction chosen from an infinite family happened before the decision.
    bool sampled_subtraction = false;
    Index decision_rank = -1;
    Index decision_pt_rank = -1;
    Index decision_n = -1;
    Index eliminant_degree = -1;
    std::size_t enumerated_vectors = 0;
    std::vector<std::string> warnings;
    int next_segment = 0;
};

/// (lambda_0, bar lambda_0) = (1/<v|rho^-1|v>, 1/<v*|(rho^TA)^-1|v*>) for unit v.
/// Throws VectorOutsideRange unless v is in R(rho) and v* in R(rho^TA).
std::pair<double, double> lambda_bounds(const DensityState &rho, const ProductVector &v);

struct Subtraction {
    CMatrix matrix;
    double lambda = 0.0;
    double lambda0 = 0.0;
    double lambda0_bar = 0.0;
    SubtractionCase declared = SubtractionCase::III;
};

/// rho - lambda |v><v| with lambda = min(lambda_0, bar lambda_0). The declared
/// case compares the eigenvalue left on each side, to first order in the
/// lambda gap, with the rank cutoff rank_rel_tol ||rho||.
Subtraction subtract(const DensityState &rho, const ProductVector &v);

struct StrippedState {
    DensityState state;
    /// n x m isometry from the support back into C^n.
    CMatrix isometry;
};

/// Restricts rho to C^2 (x) supp(tr_A rho).
StrippedState strip_support(const DensityState &rho);

struct KernelReduction {
    StrippedState reduced;
    /// The subtracted |e_hat, g>, normalized, on the input space.
    ProductVector subtracted;
    double lambda = 0.0;
    TraceStep step;
};

/// Uses |e,f> in K(rho) to remove lambda |e_hat,g><e_hat,g|, where
/// rho|e_hat,f> = |e_hat,g>. The result lives on C^2 (x) C^(n-1).
/// Throws SupportViolation if rho|e_hat,f> vanishes.
KernelReduction reduce_by_kernel(const DensityState &rho, const ProductVector &kernel_vector);

/// n-term certificate for a state of rank n supported on C^2 (x) C^n.
SeparabilityCertificate decompose_rank_n(const DensityState &rho, ReductionTrace *trace = nullptr);

/// Expansion of rho on the projectors of vectors. Separable if every
/// coefficient is >= -tol and nothing lies outside their span, otherwise
/// EntangledPPT with a witness. Throws DependentProjectors if the projectors
/// are linearly dependent.
Verdict biorthogonal_check(const DensityState &rho, const std::vector<ProductVector> &vectors);

/// Certificate for rho = rho^TA built from real-alpha subtractions.
SeparabilityCertificate pt_invariant_decompose(const DensityState &rho, ReductionTrace *trace = nullptr,
                                               std::uint64_t seed = kDefaultFinderSeed);

/// Splits rho = rho_s + sigma (x) B with rho_s = (rho + rho^TA)/2 and tests
/// rho_s >= C(a) for C(a) = sum |lambda_i| (a_i^2 |0><0| + a_i^-2 |1><1|) (x) |v_i><v_i|.
/// Returns a certificate when the test passes, nothing otherwise.
std::optional<SeparabilityCertificate> symmetric_part_check(const DensityState &rho,
                                                            const std::vector<double> &a = {},
                                                            ReductionTrace *trace = nullptr);

/// Default invertible 2x2 filters: identity, diag(1, e^{i theta}) for sixteen
/// phases and fifty random matrices.
std::vector<CMatrix> default_local_filters(std::uint64_t seed = kDefaultFinderSeed);

/// Looks for A with (A (x) I) rho (A (x) I)^dagger invariant under partial
/// transposition and pulls its certificate back through A^-1. A heuristic:
/// only the given candidates are tried.
std::optional<SeparabilityCertificate> local_filter_search(const DensityState &rho,
                                                           const std::vector<CMatrix> &candidates,
                                                           ReductionTrace *trace = nullptr);

struct AnalyzeOptions {
    std::uint64_t seed = kDefaultFinderSeed;
    bool use_fallbacks = true;
    /// Chains of sampled subtractions tried before giving up, each from the
    /// state reached by kernel reductions and with its own seed.
    int sampling_attempts = 4;
    /// Empty means default_local_filters(seed).
    std::vector<CMatrix> local_filters;
};

struct Analysis {
    Verdict verdict;
    ReductionTrace trace;
};

Analysis analyze(const DensityState &rho, const AnalyzeOptions &options = {});

/// Relative tolerance for treating rho and rho^TA as equal.
inline constexpr double kPtInvariantTol = 1e-8;

}  // namespace sep2xn
