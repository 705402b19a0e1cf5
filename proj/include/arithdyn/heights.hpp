// Copyright 2026 The arithdyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARITHDYN_HEIGHTS_HPP
#define ARITHDYN_HEIGHTS_HPP

#include <map>
#include <span>
#include <vector>

#include "arithdyn/arith.hpp"
#include "arithdyn/polynomial.hpp"

namespace arithdyn {

/// Logarithmic Weil height over Q together with its exact exponential.
///
/// For a point of P^n(Q) with primitive integer coordinates (x_0 : ... : x_n)
/// the archimedean place contributes log max|x_j| and every finite place
/// contributes zero, so `multiplicative` = max|x_j| is an integer >= 1 and
/// `logarithmic` = ln(multiplicative). Comparisons that matter are done on
/// `multiplicative`.
struct HeightValue {
  BigInt multiplicative{1};
  double logarithmic = 0.0;

  static HeightValue from_multiplicative(BigInt m);
  friend bool operator==(const HeightValue& a, const HeightValue& b) {
    return a.multiplicative == b.multiplicative;
  }
};

/// Valuations of a nonzero rational at every place where it is not a unit.
struct PlaceDecomposition {
  /// ln |c|_infinity.
  double archimedean_log = 0.0;
  /// p -> v_p(c), nonzero entries only. |c|_p = p^{-v_p(c)}.
  std::map<BigInt, long> finite_parts;
};

/// Primitive integer representative: proportional to `coords`, overall gcd 1,
/// first nonzero entry positive. Throws AllZero.
std::vector<BigInt> normalize_projective(std::span<const BigRational> coords);

HeightValue height_projective(std::span<const BigRational> coords);

/// h([1 : x_1 : ... : x_r]); the zero vector has height 0.
HeightValue height_affine(std::span<const BigRational> point);

HeightValue height_rational(const BigRational& x);

/// Height of the coefficient vector as a projective point. Throws ZeroPolynomial.
HeightValue height_polynomial(const Polynomial& f);
HeightValue height_polynomial(const UPoly& f);

/// Throws ZeroInput for c = 0.
PlaceDecomposition place_decomposition(const BigRational& c);

/// True iff |num| and den are reproduced exactly by the finite valuations,
/// i.e. the product formula holds at the level of integer factorizations.
bool product_formula_holds(const BigRational& c, const PlaceDecomposition& d);

/// Exponential of ln r + sum_v max_j log+|a_j|_v, as an exact rational:
/// r * max(1, max_j |a_j|) * lcm_j(den a_j). The finite places contribute
/// max_j v_p(den a_j) * ln p each, whose sum is ln of the lcm.
BigRational sum_height_bound_exact(std::span<const BigRational> terms);

/// ln of sum_height_bound_exact. Requires at least one term.
double sum_height_bound(std::span<const BigRational> terms);

}  // namespace arithdyn

#endif  // ARITHDYN_HEIGHTS_HPP
