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

#include "sep2xn/linalg.hpp"

namespace sep2xn {

/// |e> (x) |f> with e in C^2 and f in C^n, both stored with unit norm.
/// alpha parametrizes e ~ alpha|0> + |1>; e ~ |0> is the point at infinity.
class ProductVector {
  public:
    ProductVector(CVector e, CVector f);
    static ProductVector from_alpha(Complex alpha, const CVector &f);
    static ProductVector at_infinity(const CVector &f);

    const CVector &e() const { return e_; }
    const CVector &f() const { return f_; }
    Index n() const { return f_.size(); }

    bool alpha_infinite() const { return infinite_; }
    /// Undefined (returns 0) at infinity.
    Complex alpha() const { return alpha_; }

    /// e (x) f with index i*n + k.
    CVector vector() const { return kron(e_, f_); }
    CMatrix projector() const;

    /// |e*, f>, the partner that appears in the partial transpose.
    ProductVector conj_partner() const { return ProductVector(e_.conjugate(), f_); }
    /// Unit vector orthogonal to e.
    CVector e_orthogonal() const;

  private:
    CVector e_;
    CVector f_;
    Complex alpha_ = 0.0;
    bool infinite_ = false;
};

/// Sort key: (Re alpha, Im alpha) with infinity last.
bool product_less(const ProductVector &a, const ProductVector &b);

/// |<u|v>| of the full vectors, 1 when equal up to phase.
double overlap(const ProductVector &a, const ProductVector &b);

}  // namespace sep2xn
