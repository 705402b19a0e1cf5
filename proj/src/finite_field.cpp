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

#include "arithdyn/finite_field.hpp"

#include <algorithm>

namespace arithdyn {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (std::uint64_t{1} << 61)) {
    throw Error(Errc::InvalidArgument, "prime modulus must lie in [2, 2^61)");
  }
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1 % p_;
  a %= p_;
  while (e > 0) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw Error(Errc::InvalidArgument, "inverse of zero in F_p");
  return pow(a, p_ - 2);
}

PrimeField::Elem PrimeField::reduce(const BigInt& x) const {
  return mpz_fdiv_ui(x.get_mpz_t(), p_);
}

std::optional<PrimeField::Elem> PrimeField::reduce(const BigRational& x) const {
  Elem den = mpz_fdiv_ui(x.get_den_mpz_t(), p_);
  if (den == 0) return std::nullopt;
  return mul(mpz_fdiv_ui(x.get_num_mpz_t(), p_), inv(den));
}

FpPoly fp_add(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  FpPoly out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = F.add(a[i], b[i]);
  out.trim();
  return out;
}

FpPoly fp_sub(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  FpPoly out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = F.sub(a[i], b[i]);
  out.trim();
  return out;
}

FpPoly fp_mul(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  FpPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      out.coeffs[i + j] = F.add(out.coeffs[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  out.trim();
  return out;
}

std::pair<FpPoly, FpPoly> fp_divmod(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero over F_p");
  FpPoly rem = a;
  FpPoly quo;
  if (a.degree() < b.degree()) return {quo, rem};
  const std::size_t db = b.coeffs.size() - 1;
  const auto lead_inv = F.inv(b.coeffs.back());
  quo.coeffs.assign(rem.coeffs.size() - db, 0);
  for (std::size_t k = rem.coeffs.size(); k-- > db;) {
    if (rem.coeffs[k] == 0) continue;
    auto q = F.mul(rem.coeffs[k], lead_inv);
    quo.coeffs[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) {
      rem.coeffs[k - db + j] = F.sub(rem.coeffs[k - db + j], F.mul(q, b.coeffs[j]));
    }
  }
  quo.trim();
  rem.trim();
  return {quo, rem};
}

FpPoly fp_gcd(const PrimeField& F, FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    auto li = F.inv(a.coeffs.back());
    for (auto& c : a.coeffs) c = F.mul(c, li);
  }
  return a;
}

std::vector<std::uint64_t> fp_series(const PrimeField& F, const FpPoly& a, const FpPoly& b,
                                     std::size_t n) {
  if (b[0] == 0) throw Error(Errc::InvalidArgument, "series expansion needs b(0) != 0");
  const auto b0_inv = F.inv(b[0]);
  std::vector<std::uint64_t> s(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t acc = a[k];
    for (std::size_t j = 1; j <= k && j < b.coeffs.size(); ++j) {
      acc = F.sub(acc, F.mul(b.coeffs[j], s[k - j]));
    }
    s[k] = F.mul(acc, b0_inv);
  }
  return s;
}

std::size_t FpFraction::degree() const {
  long dn = std::max(numerator.degree(), 0L);
  long dd = std::max(denominator.degree(), 0L);
  return static_cast<std::size_t>(std::max(dn, dd));
}

FpFraction fp_reduce_fraction(const PrimeField& F, FpPoly a, FpPoly b) {
  a.trim();
  b.trim();
  if (b[0] == 0) throw Error(Errc::InvalidArgument, "denominator must not vanish at 0");
  if (a.is_zero()) return FpFraction{FpPoly{}, FpPoly{{1}}};
  FpPoly g = fp_gcd(F, a, b);
  FpPoly num = fp_divmod(F, a, g).first;
  FpPoly den = fp_divmod(F, b, g).first;
  auto scale = F.inv(den[0]);
  for (auto& c : num.coeffs) c = F.mul(c, scale);
  for (auto& c : den.coeffs) c = F.mul(c, scale);
  return FpFraction{std::move(num), std::move(den)};
}

std::optional<FpPoly> reduce_upoly(const PrimeField& F, const UPoly& p) {
  FpPoly out;
  out.coeffs.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    auto r = F.reduce(c);
    if (!r) return std::nullopt;
    out.coeffs.push_back(*r);
  }
  out.trim();
  return out;
}

std::optional<FpMultiPoly> FpMultiPoly::reduce(const PrimeField& F, const Polynomial& p) {
  FpMultiPoly out;
  for (const auto& [e, c] : p.terms()) {
    auto r = F.reduce(c);
    if (!r) return std::nullopt;
    if (*r != 0) out.terms_.emplace_back(e, *r);
  }
  return out;
}

std::uint64_t FpMultiPoly::evaluate(const PrimeField& F, std::span<const std::uint64_t> point) const {
  std::uint64_t sum = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      term = F.mul(term, e[i] == 1 ? point[i] : F.pow(point[i], e[i]));
    }
    sum = F.add(sum, term);
  }
  return sum;
}

}  // namespace arithdyn
