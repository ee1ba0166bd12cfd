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

#include "sep2xn/product_vector.hpp"

#include <cmath>
#include <limits>

#include "sep2xn/errors.hpp"

namespace sep2xn {

ProductVector::ProductVector(CVector e, CVector f) : e_(std::move(e)), f_(std::move(f)) {
    if (e_.size() != 2 || f_.size() < 1) throw Error(ErrorCode::InvalidArgument, "ProductVector: bad dimensions");
    if (!all_finite(e_) || !all_finite(f_)) throw Error(ErrorCode::NonFinite, "ProductVector: non-finite entries");
    const double ne = e_.norm();
    const double nf = f_.norm();
    if (ne == 0.0 || nf == 0.0) throw Error(ErrorCode::InvalidArgument, "ProductVector: zero factor");
    // Vectors already unit up to rounding are kept as given, so normalization is idempotent.
    constexpr double kUnitSlack = 4.0 * std::numeric_limits<double>::epsilon();
    if (std::abs(ne - 1.0) > kUnitSlack) e_ /= ne;
    if (std::abs(nf - 1.0) > kUnitSlack) f_ /= nf;
    // |e1| below this is read as the point at infinity of the alpha chart.
    if (std::abs(e_(1)) <= 1e-14) {
        infinite_ = true;
    } else {
        alpha_ = e_(0) / e_(1);
    }
}

ProductVector ProductVector::from_alpha(Complex alpha, const CVector &f) {
    CVector e(2);
    e << alpha, 1.0;
    return ProductVector(e, f);
}

ProductVector ProductVector::at_infinity(const CVector &f) {
    CVector e(2);
    e << 1.0, 0.0;
    return ProductVector(e, f);
}

CMatrix ProductVector::projector() const {
    const CVector v = vector();
    return v * v.adjoint();
}

CVector ProductVector::e_orthogonal() const {
    CVector out(2);
    out << -std::conj(e_(1)), std::conj(e_(0));
    return out;
}

bool product_less(const ProductVector &a, const ProductVector &b) {
    if (a.alpha_infinite() != b.alpha_infinite()) return b.alpha_infinite();
    if (a.alpha_infinite()) return false;
    if (a.alpha().real() != b.alpha().real()) return a.alpha().real() < b.alpha().real();
    return a.alpha().imag() < b.alpha().imag();
}

double overlap(const ProductVector &a, const ProductVector &b) {
    if (a.n() != b.n()) return 0.0;
    return std::abs(a.vector().dot(b.vector()));
}

}  // namespace sep2xn
