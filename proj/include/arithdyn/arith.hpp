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

#ifndef ARITHDYN_ARITH_HPP
#define ARITHDYN_ARITH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace arithdyn {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (zero is 0/1). Every constructor path in this library calls
/// canonicalize(); GMP arithmetic preserves the form.
using BigRational = mpq_class;

enum class Errc {
  AllZero,
  ZeroPolynomial,
  ZeroInput,
  SyntaxError,
  UnknownVariable,
  NegativeExponent,
  ExponentOverflow,
  ArityMismatch,
  InsufficientData,
  NonIntegerOrbit,
  RepeatedPoint,
  BadPrime,
  InsufficientTerms,
  DegreeSplitInfeasible,
  NoSolution,
  NonIntegralEtaL,
  OrbitOverflow,
  SpecError,
  InvalidArgument,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// ---------------------------------------------------------------------------
// Rationals

/// Parses "a" or "a/b" (optional sign on a, b > 0) and canonicalizes.
BigRational parse_rational(std::string_view text);

/// Always "num/den", including "0/1" and "5/1".
std::string to_fraction_string(const BigRational& q);

/// Human form: "5" for integers, "3/2" otherwise.
std::string to_display_string(const BigRational& q);

bool is_integer(const BigRational& q);

/// Bit size of the larger of numerator and denominator.
std::size_t bit_size(const BigRational& q);

/// Natural log of |x| for x != 0, accurate to double precision for any size.
double log_abs(const BigInt& x);

/// Certified enclosure [lo, hi] of ln(x) for x >= 1.
std::pair<double, double> log_bounds(const BigInt& x);

// ---------------------------------------------------------------------------
// Primes and factorization

/// All primes p <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

bool is_probable_prime(const BigInt& n);

/// Prime factorization of |n| (n != 0) as prime -> exponent. Trial division
/// followed by Pollard-Brent rho on the cofactor.
std::map<BigInt, unsigned> factorize(const BigInt& n);

/// Sum of ln p over the given primes.
double log_prime_sum(const std::vector<std::uint64_t>& primes);

}  // namespace arithdyn

#endif  // ARITHDYN_ARITH_HPP
