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

#include "arithdyn/heights.hpp"

#include <cmath>

namespace arithdyn {

HeightValue HeightValue::from_multiplicative(BigInt m) {
  HeightValue h;
  h.logarithmic = m <= 1 ? 0.0 : log_abs(m);
  h.multiplicative = std::move(m);
  return h;
}

std::vector<BigInt> normalize_projective(std::span<const BigRational> coords) {
  BigInt lcm_den(1);
  bool any_nonzero = false;
  for (const auto& c : coords) {
    if (c == 0) continue;
    any_nonzero = true;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  if (!any_nonzero) throw Error(Errc::AllZero, "all coordinates are zero");

  std::vector<BigInt> out;
  out.reserve(coords.size());
  BigInt g(0);
  for (const auto& c : coords) {
    BigInt v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  bool flip = false;
  for (const auto& v : out) {
    if (v != 0) {
      flip = v < 0;
      break;
    }
  }
  for (auto& v : out) {
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    if (flip) v = -v;
  }
  return out;
}

HeightValue height_projective(std::span<const BigRational> coords) {
  std::vector<BigInt> v = normalize_projective(coords);
  BigInt m(0);
  for (const auto& x : v) {
    if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
  }
  return HeightValue::from_multiplicative(std::move(m));
}

HeightValue height_affine(std::span<const BigRational> point) {
  std::vector<BigRational> with_one;
  with_one.reserve(point.size() + 1);
  with_one.emplace_back(1);
  with_one.insert(with_one.end(), point.begin(), point.end());
  return height_projective(with_one);
}

HeightValue height_rational(const BigRational& x) {
  // h([1 : a/b]) = ln max(|a|, b).
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  return HeightValue::from_multiplicative(mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) > 0 ? BigInt(abs(a)) : b);
}

HeightValue height_polynomial(const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "height of the zero polynomial");
  return height_projective(f.coefficients());
}

HeightValue height_polynomial(const UPoly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "height of the zero polynomial");
  return height_projective(f.coefficients());
}

PlaceDecomposition place_decomposition(const BigRational& c) {
  if (c == 0) throw Error(Errc::ZeroInput, "place decomposition of zero");
  PlaceDecomposition d;
  d.archimedean_log = log_abs(c.get_num()) - log_abs(c.get_den());
  for (const auto& [p, e] : factorize(c.get_num())) d.finite_parts[p] += static_cast<long>(e);
  for (const auto& [p, e] : factorize(c.get_den())) d.finite_parts[p] -= static_cast<long>(e);
  std::erase_if(d.finite_parts, [](const auto& kv) { return kv.second == 0; });
  return d;
}

bool product_formula_holds(const BigRational& c, const PlaceDecomposition& d) {
  if (c == 0) return false;
  BigInt num(1), den(1);
  for (const auto& [p, v] : d.finite_parts) {
    BigInt pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v > 0 ? v : -v));
    if (v > 0) {
      num *= pk;
    } else {
      den *= pk;
    }
  }
  if (num != abs(c.get_num()) || den != c.get_den()) return false;
  // Archimedean side: ln|c|_inf + sum_p ln|c|_p = ln|c| - sum_p v_p ln p = 0.
  double sum = d.archimedean_log;
  for (const auto& [p, v] : d.finite_parts) sum -= static_cast<double>(v) * log_abs(p);
  return std::fabs(sum) <= 1e-9 * (1.0 + std::fabs(d.archimedean_log));
}

BigRational sum_height_bound_exact(std::span<const BigRational> terms) {
  if (terms.empty()) throw Error(Errc::InvalidArgument, "sum bound needs at least one term");
  BigRational arch(1);
  BigInt lcm_den(1);
  for (const auto& a : terms) {
    BigRational mag = abs(a);
    if (mag > arch) arch = mag;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), a.get_den_mpz_t());
  }
  BigRational bound = arch * BigRational(lcm_den) * BigRational(static_cast<unsigned long>(terms.size()));
  bound.canonicalize();
  return bound;
}

double sum_height_bound(std::span<const BigRational> terms) {
  BigRational b = sum_height_bound_exact(terms);
  return log_abs(b.get_num()) - log_abs(b.get_den());
}

}  // namespace arithdyn
