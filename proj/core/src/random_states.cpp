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

#include "sep2xn/random_states.hpp"

#include <cmath>

#include "sep2xn/errors.hpp"

namespace sep2xn {

namespace {

void require_n(Index n, Index min = 1) {
    if (n < min) throw Error(ErrorCode::InvalidArgument, "generator: n too small");
}

GeneratedState normalized(GeneratedState g) {
    const double tr = g.matrix.trace().real();
    g.matrix /= tr;
    for (double &w : g.weights) w /= tr;
    g.matrix = hermitian_part(g.matrix);
    return g;
}

}  // namespace

CVector random_complex_vector(Index n, Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
    return v;
}

CMatrix random_complex_matrix(Index rows, Index cols, Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix m(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) m(i, j) = Complex(g(rng), g(rng));
    }
    return m;
}

ProductVector random_product_vector(Index n, Rng &rng) {
    const CVector e = random_complex_vector(2, rng);
    const CVector f = random_complex_vector(n, rng);
    return ProductVector(e, f);
}

GeneratedState random_separable(Index n, Index terms, Rng &rng) {
    require_n(n);
    if (terms < 1) throw Error(ErrorCode::InvalidArgument, "random_separable: need at least one term");
    std::uniform_real_distribution<double> w(0.5, 1.5);
    GeneratedState g;
    g.kind = "separable";
    g.n = n;
    g.matrix = CMatrix::Zero(2 * n, 2 * n);
    for (Index i = 0; i < terms; ++i) {
        ProductVector v = random_product_vector(n, rng);
        const double weight = w(rng);
        g.matrix += weight * v.projector();
        g.generators.push_back(std::move(v));
        g.weights.push_back(weight);
    }
    return normalized(std::move(g));
}

CMatrix random_pt_invariant_hermitian(Index n, Rng &rng) {
    require_n(n);
    const CMatrix x = random_complex_matrix(2 * n, 2 * n, rng);
    const CMatrix h = hermitian_part(x);
    return hermitian_part(0.5 * (h + partial_transpose(h, n)));
}

GeneratedState random_pt_invariant(Index n, Rng &rng, double margin) {
    if (!(margin > 0.0)) throw Error(ErrorCode::InvalidArgument, "random_pt_invariant: margin must be positive");
    const CMatrix h = random_pt_invariant_hermitian(n, rng);
    GeneratedState g;
    g.kind = "pt-invariant";
    g.n = n;
    g.matrix = h + (margin - min_eigenvalue(h)) * CMatrix::Identity(2 * n, 2 * n);
    return normalized(std::move(g));
}

GeneratedState random_symmetric_split(Index n, double ratio, Rng &rng) {
    if (!(ratio >= 0.0)) throw Error(ErrorCode::InvalidArgument, "random_symmetric_split: ratio must be >= 0");
    GeneratedState sym = random_pt_invariant(n, rng);
    const double lmin = min_eigenvalue(sym.matrix);
    CMatrix b = hermitian_part(random_complex_matrix(n, n, rng));
    b *= ratio * lmin / operator_norm(b);
    GeneratedState g;
    g.kind = "symmetric-split";
    g.n = n;
    g.matrix = sym.matrix;
    const Complex i(0.0, 1.0);
    g.matrix.block(0, n, n, n) += i * b;
    g.matrix.block(n, 0, n, n) -= i * b;
    return normalized(std::move(g));
}

GeneratedState embedded_max_entangled(Index n) {
    require_n(n, 2);
    CVector psi = CVector::Zero(2 * n);
    psi(0) = 1.0 / std::sqrt(2.0);
    psi(n + 1) = 1.0 / std::sqrt(2.0);
    GeneratedState g;
    g.kind = "max-entangled";
    g.n = n;
    g.matrix = psi * psi.adjoint();
    return g;
}

GeneratedState noisy_max_entangled(Index n, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "noisy_max_entangled: p outside [0, 1]");
    GeneratedState g = embedded_max_entangled(n);
    g.kind = "npt";
    g.matrix = p * g.matrix + (1.0 - p) / static_cast<double>(2 * n) * CMatrix::Identity(2 * n, 2 * n);
    return g;
}

GeneratedState random_ppt(Index n, Rng &rng, double margin) {
    require_n(n);
    const CMatrix x = random_complex_matrix(2 * n, 2 * n, rng);
    CMatrix rho = x * x.adjoint();
    rho /= rho.trace().real();
    const CMatrix id = CMatrix::Identity(2 * n, 2 * n) / static_cast<double>(2 * n);
    auto pt_min = [&](double p) { return min_eigenvalue(partial_transpose(CMatrix((1.0 - p) * rho + p * id), n)); };
    double lo = 0.0;
    double hi = 1.0;
    if (pt_min(0.0) < margin / static_cast<double>(2 * n)) {
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (pt_min(mid) >= 0.0 ? hi : lo) = mid;
        }
    } else {
        hi = 0.0;
    }
    const double p = std::min(1.0, hi + margin);
    GeneratedState g;
    g.kind = "random-ppt";
    g.n = n;
    g.matrix = (1.0 - p) * rho + p * id;
    return normalized(std::move(g));
}

GeneratedState planted_kernel(Index n, Index terms, Index eta_rank, Rng &rng) {
    require_n(n, 2);
    if (terms < 0 || eta_rank < 1 || eta_rank > n) {
        throw Error(ErrorCode::InvalidArgument, "planted_kernel: inconsistent parameters");
    }
    std::uniform_real_distribution<double> w(0.5, 1.5);
    GeneratedState g;
    g.kind = "planted-kernel";
    g.n = n;
    g.matrix = CMatrix::Zero(2 * n, 2 * n);
    for (Index i = 0; i < terms; ++i) {
        CVector f = random_complex_vector(n, rng);
        f(0) = 0.0;
        ProductVector v(random_complex_vector(2, rng), f);
        const double weight = w(rng);
        g.matrix += weight * v.projector();
        g.generators.push_back(std::move(v));
        g.weights.push_back(weight);
    }
    CVector one = CVector::Zero(2);
    one(1) = 1.0;
    for (Index i = 0; i < eta_rank; ++i) {
        ProductVector v(one, random_complex_vector(n, rng));
        const double weight = w(rng);
        g.matrix += weight * v.projector();
        g.generators.push_back(std::move(v));
        g.weights.push_back(weight);
    }
    return normalized(std::move(g));
}

}  // namespace sep2xn
