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

#include <random>
#include <string>
#include <vector>

#include "sep2xn/linalg.hpp"
#include "sep2xn/product_vector.hpp"

namespace sep2xn {

using Rng = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
CVector random_complex_vector(Index n, Rng &rng);
CMatrix random_complex_matrix(Index rows, Index cols, Rng &rng);
ProductVector random_product_vector(Index n, Rng &rng);

/// A test state with the construction data that produced it. Generators and
/// weights are empty when the state is not built from product projectors.
struct GeneratedState {
    std::string kind;
    Index n = 0;
    CMatrix matrix;
    std::vector<ProductVector> generators;
    std::vector<double> weights;
};

/// sum_i w_i |e_i,f_i><e_i,f_i| over `terms` random product vectors with
/// weights in [0.5, 1.5], scaled to unit trace.
GeneratedState random_separable(Index n, Index terms, Rng &rng);

/// Random Hermitian H with H^TA = H.
CMatrix random_pt_invariant_hermitian(Index n, Rng &rng);

/// H + cI with H^TA = H, c chosen so that lambda_min = margin before scaling
/// to unit trace.
GeneratedState random_pt_invariant(Index n, Rng &rng, double margin = 0.1);

/// rho_s + sigma (x) B with rho_s PT-invariant and full rank, sigma =
/// [[0, i], [-i, 0]] and ||B|| = ratio * lambda_min(rho_s), so that
/// ||(rho + rho^TA)^-1|| ||rho - rho^TA|| = ratio.
GeneratedState random_symmetric_split(Index n, double ratio, Rng &rng);

/// (|00> + |11>)/sqrt(2) projected, inside C^2 (x) C^n.
GeneratedState embedded_max_entangled(Index n);

/// p |phi+><phi+| + (1 - p) I / 2n; NPT for p above 1/(n + 1).
GeneratedState noisy_max_entangled(Index n, double p);

/// Random full-rank state mixed with the identity just past the PPT
/// boundary: the identity weight exceeds the smallest PPT-making weight by
/// margin. States that start out PPT get weight margin.
GeneratedState random_ppt(Index n, Rng &rng, double margin = 1e-3);

/// sum_i |e_i, g_i><e_i, g_i| + |1><1| (x) eta with every g_i orthogonal to
/// |0> and a random eta of rank eta_rank, so |0>|0> lies in the kernel of rho
/// and of rho^TA.
GeneratedState planted_kernel(Index n, Index terms, Index eta_rank, Rng &rng);

}  // namespace sep2xn
