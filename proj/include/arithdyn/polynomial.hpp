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

#ifndef ARITHDYN_POLYNOMIAL_HPP
#define ARITHDYN_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arithdyn/arith.hpp"

namespace arithdyn {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order, largest monomial first: higher total degree
/// wins, ties broken by comparing exponents of x_1, x_2, ... in turn.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

std::uint64_t total_degree(const Exponents& e);

/// Sparse polynomial over Q in a fixed number of variables. Zero
/// coefficients are never stored; the zero polynomial has no terms.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, BigRational, GradedLexGreater>;

  explicit Polynomial(std::size_t arity = 1) : arity_(arity) {}

  static Polynomial constant(std::size_t arity, const BigRational& c);
  /// The coordinate function x_index (0-based).
  static Polynomial variable(std::size_t arity, std::size_t index);

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint64_t degree() const;

  /// Adds c * x^e, dropping the term if the coefficient cancels.
  void add_term(const Exponents& e, const BigRational& c);
  BigRational coefficient(const Exponents& e) const;

  /// Coefficients in graded-lex order (largest monomial first).
  std::vector<BigRational> coefficients() const;
  bool has_integer_coefficients() const;

  BigRational evaluate(std::span<const BigRational> point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const BigRational& c);
  Polynomial pow(std::uint32_t exponent) const;

  /// Replaces x_i by x_{perm[i]}; perm must be a permutation of 0..arity-1.
  Polynomial permute_variables(std::span<const std::size_t> perm) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void check_arity(const Polynomial& other) const;

  std::size_t arity_;
  TermMap terms_;
};

/// Canonical text in graded-lex order, e.g. "3/2*x*y^2 - x + 1".
/// The output parses back to the same polynomial.
std::string format_polynomial(const Polynomial& p, std::span<const std::string> variables);

/// Recursive-descent parser for
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | var | '(' expr ')' | '-' factor
///   rational := int ('/' posint)?
/// Whitespace is insignificant. Throws Error with SyntaxError (message
/// carries the byte offset), UnknownVariable, NegativeExponent or
/// ExponentOverflow.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables);

/// f : A^r -> A^r given by r coordinate polynomials in r variables.
class PolySelfMap {
 public:
  explicit PolySelfMap(std::vector<Polynomial> coordinates);

  std::size_t arity() const { return coordinates_.size(); }
  const std::vector<Polynomial>& coordinates() const { return coordinates_; }

  std::vector<BigRational> apply(std::span<const BigRational> point) const;

  static PolySelfMap identity(std::size_t arity);

 private:
  std::vector<Polynomial> coordinates_;
};

/// lambda : A^r -> A^1.
class Observable {
 public:
  explicit Observable(Polynomial polynomial) : polynomial_(std::move(polynomial)) {}

  static Observable coordinate(std::size_t arity, std::size_t index) {
    return Observable(Polynomial::variable(arity, index));
  }

  std::size_t arity() const { return polynomial_.arity(); }
  const Polynomial& polynomial() const { return polynomial_; }
  BigRational operator()(std::span<const BigRational> point) const {
    return polynomial_.evaluate(point);
  }

 private:
  Polynomial polynomial_;
};

/// Dense univariate polynomial over Q, coefficients indexed by degree.
/// Trailing zeros are trimmed, so the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<BigRational> coefficients);

  static UPoly monomial(std::size_t degree, const BigRational& c = 1);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^i, zero past the degree.
  BigRational operator[](std::size_t i) const;

  BigRational evaluate(const BigRational& t) const;
  UPoly truncated(std::size_t n) const;  // keeps degrees < n

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const BigRational& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const BigRational& c) { return a *= c; }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Euclidean division; throws on a zero divisor.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  static UPoly gcd(UPoly a, UPoly b);  // monic, or zero

  Polynomial to_polynomial() const;  // arity 1

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

std::string format_upoly(const UPoly& p, std::string_view variable = "n");

}  // namespace arithdyn

#endif  // ARITHDYN_POLYNOMIAL_HPP
