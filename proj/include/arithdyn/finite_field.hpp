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

#ifndef ARITHDYN_FINITE_FIELD_HPP
#define ARITHDYN_FINITE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arithdyn/arith.hpp"
#include "arithdyn/polynomial.hpp"

namespace arithdyn {

/// Z/pZ for a prime p < 2^61, word-sized arithmetic.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Throws InvalidArgument for zero.
  Elem inv(Elem a) const;

  Elem reduce(const BigInt& x) const;
  /// nullopt when p divides the denominator.
  std::optional<Elem> reduce(const BigRational& x) const;

 private:
  std::uint64_t p_;
};

/// Dense polynomial over F_p, coefficients indexed by degree, trimmed.
struct FpPoly {
  std::vector<std::uint64_t> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  std::uint64_t operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
  friend bool operator==(const FpPoly&, const FpPoly&) = default;
};

FpPoly fp_add(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const PrimeField& F, const FpPoly& a, const FpPoly& b);
std::pair<FpPoly, FpPoly> fp_divmod(const PrimeField& F, const FpPoly& a, const FpPoly& b);
/// Monic gcd (zero if both are zero).
FpPoly fp_gcd(const PrimeField& F, FpPoly a, FpPoly b);
/// First n coefficients of the power series a / b; b(0) must be nonzero.
std::vector<std::uint64_t> fp_series(const PrimeField& F, const FpPoly& a, const FpPoly& b,
                                     std::size_t n);

/// A / B over F_p in lowest terms with B(0) = 1.
struct FpFraction {
  FpPoly numerator;
  FpPoly denominator;

  /// max(deg A, deg B), with the zero numerator counted as degree 0.
  std::size_t degree() const;
  friend bool operator==(const FpFraction&, const FpFraction&) = default;
};

/// Divides out gcd(a, b) and scales so b(0) = 1. Requires b(0) != 0.
FpFraction fp_reduce_fraction(const PrimeField& F, FpPoly a, FpPoly b);

/// Reduces a rational polynomial coefficientwise; nullopt if some
/// coefficient is not p-integral.
std::optional<FpPoly> reduce_upoly(const PrimeField& F, const UPoly& p);

/// Multivariate polynomial reduced mod p, ready for fast evaluation.
class FpMultiPoly {
 public:
  /// nullopt if some coefficient is not p-integral.
  static std::optional<FpMultiPoly> reduce(const PrimeField& F, const Polynomial& p);

  std::uint64_t evaluate(const PrimeField& F, std::span<const std::uint64_t> point) const;

 private:
  std::vector<std::pair<Exponents, std::uint64_t>> terms_;
};

}  // namespace arithdyn

#endif  // ARITHDYN_FINITE_FIELD_HPP
