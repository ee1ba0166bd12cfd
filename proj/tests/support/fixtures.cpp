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

#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace fixture {

CMatrix horodecki_2x4(double b) {
    CMatrix m = CMatrix::Zero(8, 8);
    for (Index i = 0; i < 8; ++i) {
        if (i != 4 && i != 7) m(i, i) = b;
    }
    for (Index i = 0; i < 3; ++i) {
        m(i, i + 5) = b;
        m(i + 5, i) = b;
    }
    m(4, 4) = m(7, 7) = (1.0 + b) / 2.0;
    m(4, 7) = m(7, 4) = std::sqrt(1.0 - b * b) / 2.0;
    return m / (7.0 * b + 1.0);
}

CVector basis_vector(Index i, Index k, Index n) { return CVector::Unit(2 * n, i * n + k); }

CMatrix sum_of_projectors(const std::vector<sep2xn::ProductVector> &vs) {
    const Index dim = 2 * vs.front().n();
    CMatrix out = CMatrix::Zero(dim, dim);
    for (const auto &v : vs) out += v.projector();
    return out;
}

CMatrix orthonormalize(const CMatrix &columns) {
    Eigen::HouseholderQR<CMatrix> qr(columns);
    return qr.householderQ() * CMatrix::Identity(columns.rows(), columns.cols());
}

}  // namespace fixture

namespace fixture {

CMatrix planted_coefficients(Index x, Index y, const std::vector<Complex> &roots, sep2xn::Rng &rng) {
    CMatrix c = sep2xn::random_complex_matrix(x + 1, y + 1, rng);
    const Index k = static_cast<Index>(roots.size());
    if (k == 0) return c;
    // Free slots in order of total degree.
    std::vector<std::pair<Index, Index>> slots;
    for (Index d = 0; d <= x + y && static_cast<Index>(slots.size()) < k; ++d) {
        for (Index j = 0; j <= std::min(d, x); ++j) {
            if (d - j <= y && static_cast<Index>(slots.size()) < k) slots.emplace_back(j, d - j);
        }
    }
    for (const auto &[j, l] : slots) c(j, l) = 0.0;
    CMatrix a(k, k);
    CVector rhs(k);
    for (Index r = 0; r < k; ++r) {
        const Complex al = roots[static_cast<std::size_t>(r)];
        Complex rest = 0.0;
        for (Index j = 0; j <= x; ++j) {
            for (Index l = 0; l <= y; ++l) rest += c(j, l) * std::pow(al, static_cast<double>(j)) *
                                                  std::pow(std::conj(al), static_cast<double>(l));
        }
        rhs(r) = -rest;
        for (Index s = 0; s < k; ++s) {
            const auto &[j, l] = slots[static_cast<std::size_t>(s)];
            a(r, s) = std::pow(al, static_cast<double>(j)) * std::pow(std::conj(al), static_cast<double>(l));
        }
    }
    const CVector sol = a.fullPivLu().solve(rhs);
    for (Index s = 0; s < k; ++s) {
        const auto &[j, l] = slots[static_cast<std::size_t>(s)];
        c(j, l) = sol(s);
    }
    return c;
}

}  // namespace fixture
