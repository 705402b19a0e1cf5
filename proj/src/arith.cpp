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

#include "arithdyn/arith.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace arithdyn {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::AllZero: return "AllZero";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::NegativeExponent: return "NegativeExponent";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::NonIntegerOrbit: return "NonIntegerOrbit";
    case Errc::RepeatedPoint: return "RepeatedPoint";
    case Errc::BadPrime: return "BadPrime";
    case Errc::InsufficientTerms: return "InsufficientTerms";
    case Errc::DegreeSplitInfeasible: return "DegreeSplitInfeasible";
    case Errc::NoSolution: return "NoSolution";
    case Errc::NonIntegralEtaL: return "NonIntegralEtaL";
    case Errc::OrbitOverflow: return "OrbitOverflow";
    case Errc::SpecError: return "SpecError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = trim(s.substr(0, slash));
    den = trim(s.substr(slash + 1));
  }
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(Errc::SyntaxError, "malformed rational '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw Error(Errc::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_display_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return to_fraction_string(q);
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

std::size_t bit_size(const BigRational& q) {
  std::size_t n = mpz_sizeinbase(q.get_num_mpz_t(), 2);
  std::size_t d = mpz_sizeinbase(q.get_den_mpz_t(), 2);
  return std::max(n, d);
}

double log_abs(const BigInt& x) {
  if (x == 0) return -HUGE_VAL;
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::numbers::ln2;
}

std::pair<double, double> log_bounds(const BigInt& x) {
  if (x <= 1) return {0.0, 0.0};
  // mpz_get_d_2exp truncates, so the true mantissa lies in [m, m + 2^-52 m].
  double v = log_abs(x);
  double slack = 1e-12 * std::max(1.0, std::fabs(v));
  return {std::max(0.0, v - slack), v + slack};
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

bool is_probable_prime(const BigInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

// Pollard-Brent: returns a nontrivial factor of composite odd n.
BigInt pollard_brent(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys;
    std::size_t r = 1;
    const std::size_t m = 128;
    auto step = [&](const BigInt& v) {
      BigInt w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    while (g == 1) {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = step(y);
      std::size_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          BigInt diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  BigInt d = pollard_brent(n);
  factor_into(d, out);
  factor_into(BigInt(n / d), out);
}

}  // namespace

std::map<BigInt, unsigned> factorize(const BigInt& n) {
  if (n == 0) throw Error(Errc::ZeroInput, "cannot factor zero");
  std::map<BigInt, unsigned> out;
  BigInt rest = abs(n);
  static const std::vector<std::uint64_t> small = primes_up_to(10000);
  for (std::uint64_t p : small) {
    if (rest == 1) break;
    if (BigInt(p) * p > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out[BigInt(p)] = e;
  }
  factor_into(rest, out);
  return out;
}

double log_prime_sum(const std::vector<std::uint64_t>& primes) {
  double sum = 0.0;
  for (std::uint64_t p : primes) sum += std::log(static_cast<double>(p));
  return sum;
}

}  // namespace arithdyn
