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

// Independent reference computations used by the tests. Nothing here calls
// into the library's height, factorization or series code.

#ifndef ARITHDYN_TESTS_ORACLES_HPP
#define ARITHDYN_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Rat = mpq_class;

// Plain trial division; inputs are desk-sized.
inline std::map<Int, long> trial_factor(Int n) {
  std::map<Int, long> out;
  if (n < 0) n = -n;
  for (Int d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

// v_p(x) for nonzero rational x.
inline long valuation(const Rat& x, const Int& p) {
  long v = 0;
  Int a = abs(x.get_num()), b = x.get_den();
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  while (b % p == 0) {
    b /= p;
    --v;
  }
  return v;
}

// |x|_p as an exact rational; |0|_p = 0.
inline Rat abs_p(const Rat& x, const Int& p) {
  if (x == 0) return 0;
  long v = valuation(x, p);
  Int pw;
  mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
  return v >= 0 ? Rat(Int(1), pw) : Rat(pw);
}

// Multiplicative projective height as the product over all places of
// max_i |x_i|_v. Only primes dividing some numerator or denominator matter.
inline Rat place_sum_height(const std::vector<Rat>& x) {
  std::set<Int> primes;
  Rat arch = 0;
  for (const auto& c : x) {
    if (c == 0) continue;
    for (const auto& [p, e] : trial_factor(c.get_num())) primes.insert(p);
    for (const auto& [p, e] : trial_factor(c.get_den())) primes.insert(p);
    if (abs(c) > arch) arch = abs(c);
  }
  Rat H = arch;
  for (const auto& p : primes) {
    Rat m = 0;
    for (const auto& c : x) {
      Rat a = abs_p(c, p);
      if (a > m) m = a;
    }
    H *= m;
  }
  H.canonicalize();
  return H;
}

// Smallest positive k with k*x integral (search), then strip the content.
inline std::vector<Int> brute_force_normalize(const std::vector<Rat>& x) {
  for (unsigned long k = 1;; ++k) {
    bool ok = true;
    for (const auto& c : x) {
      Rat s = c * Rat(k);
      s.canonicalize();
      if (s.get_den() != 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Int> v;
    Int g = 0;
    for (const auto& c : x) {
      Rat s = c * Rat(k);
      s.canonicalize();
      v.push_back(s.get_num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
    }
    for (auto& e : v) e /= g;
    for (auto& e : v) {
      if (e != 0) {
        if (e < 0) {
          for (auto& f : v) f = -f;
        }
        break;
      }
    }
    return v;
  }
}

// First n coefficients of P/Q with Q(0) = 1, by long division.
inline std::vector<Rat> series_of(const std::vector<Rat>& P, const std::vector<Rat>& Q, std::size_t n) {
  std::vector<Rat> a(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rat s = k < P.size() ? P[k] : Rat(0);
    for (std::size_t j = 1; j < Q.size() && j <= k; ++j) s -= Q[j] * a[k - j];
    a[k] = s / Q[0];
  }
  return a;
}

// Dense polynomial helpers over Q (coefficients low to high).
inline void trim(std::vector<Rat>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

inline std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

inline std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

inline std::vector<Rat> poly_div_exact(std::vector<Rat> a, const std::vector<Rat>& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  std::vector<Rat> q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Rat c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  return q;
}

// Random fraction P/Q with deg <= max_deg, |coeff| <= bound, Q(0) = 1,
// returned in lowest terms with Q(0) = 1.
struct Fraction {
  std::vector<Rat> P, Q;
};

inline Fraction random_fraction(std::mt19937_64& rng, int max_deg, int bound) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-bound, bound);
  for (;;) {
    std::vector<Rat> P(deg(rng) + 1), Q(deg(rng) + 1);
    for (auto& c : P) c = coef(rng);
    for (auto& c : Q) c = coef(rng);
    Q[0] = 1;
    trim(P);
    trim(Q);
    if (P.empty()) continue;
    auto g = poly_gcd(P, Q);
    P = poly_div_exact(P, g);
    Q = poly_div_exact(Q, g);
    Rat q0 = Q[0];
    for (auto& c : P) c /= q0;
    for (auto& c : Q) c /= q0;
    return {P, Q};
  }
}

// Iterates x -> x^2 + 1 from 0 and returns c_0..c_n.
inline std::vector<Int> square_plus_one(std::size_t n) {
  std::vector<Int> out{0};
  while (out.size() <= n) out.push_back(out.back() * out.back() + 1);
  return out;
}

inline std::vector<Int> fibonacci(std::size_t n) {
  std::vector<Int> out{0, 1};
  while (out.size() <= n) out.push_back(out[out.size() - 1] + out[out.size() - 2]);
  out.resize(n + 1);
  return out;
}

// Naive primes by trial division.
inline std::vector<std::uint64_t> primes_naive(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(n);
  }
  return out;
}

inline Rat random_rational(std::mt19937_64& rng, int bits) {
  std::uniform_int_distribution<std::uint64_t> u;
  auto draw = [&](bool allow_zero) {
    for (;;) {
      std::uint64_t v = u(rng);
      if (bits < 64) v &= (std::uint64_t(1) << bits) - 1;
      if (v != 0 || allow_zero) {
        Int z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
        return z;
      }
    }
  };
  Int num = draw(false);
  if (u(rng) & 1) num = -num;
  Rat q(num, draw(false));
  q.canonicalize();
  return q;
}

}  // namespace oracle

#endif  // ARITHDYN_TESTS_ORACLES_HPP
