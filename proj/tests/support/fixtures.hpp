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

#include "sep2xn/sep2xn.hpp"

namespace fixture {

using sep2xn::CMatrix;
using sep2xn::Complex;
using sep2xn::CVector;
using sep2xn::Index;

/// Bound entangled state on C^2 (x) C^4 of rank 5 with a PT of rank 5,
/// parametrized by b in (0, 1).
CMatrix horodecki_2x4(double b);

/// Basis vector |i> (x) |k> of C^2 (x) C^n.
CVector basis_vector(Index i, Index k, Index n);

/// Sum of unit-weight projectors onto the given vectors.
CMatrix sum_of_projectors(const std::vector<sep2xn::ProductVector> &vs);

/// Orthonormal basis of the columns (Householder QR), full column rank assumed.
CMatrix orthonormalize(const CMatrix &columns);

}  // namespace fixture

namespace fixture {

/// Random coefficient grid of degrees (x, y) with the lowest-order
/// coefficients adjusted so that every alpha in roots solves
/// P(alpha, conj alpha) = 0. Needs roots.size() < (x + 1)(y + 1).
CMatrix planted_coefficients(Index x, Index y, const std::vector<Complex> &roots, sep2xn::Rng &rng);

}  // namespace fixture
