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

#include "arithdyn/modp.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

namespace arithdyn {

namespace {

[[noreturn]] void bad_prime(std::uint64_t p) {
  throw Error(Errc::BadPrime, std::to_string(p) + " divides a denominator of the model");
}

}  // namespace

ReducedOrbit::ReducedOrbit(const OrbitSource& source, std::uint64_t p) : field_(p) {
  source.validate();
  for (const auto& coord : source.map.coordinates()) {
    auto r = FpMultiPoly::reduce(field_, coord);
    if (!r) bad_prime(p);
    map_.push_back(std::move(*r));
  }
  auto obs = FpMultiPoly::reduce(field_, source.observable.polynomial());
  if (!obs) bad_prime(p);
  observable_ = std::move(*obs);
  for (const auto& x : source.start) {
    auto r = field_.reduce(x);
    if (!r) bad_prime(p);
    start_.push_back(*r);
  }
}

ReducedOrbit::State ReducedOrbit::step(const State& x) const {
  State out(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) out[i] = map_[i].evaluate(field_, x);
  return out;
}

std::uint64_t ReducedOrbit::observe(const State& x) const { return observable_.evaluate(field_, x); }

std::vector<std::uint64_t> ReducedOrbit::observable_sequence(std::size_t length) const {
  std::vector<std::uint64_t> out;
  out.reserve(length);
  State x = start_;
  for (std::size_t n = 0; n < length; ++n) {
    out.push_back(observe(x));
    if (n + 1 < length) x = step(x);
  }
  return out;
}

CycleStructure cycle_structure(const ReducedOrbit& orbit) {
  const auto& x0 = orbit.start();
  // Brent: find the period lam.
  std::size_t power = 1, lam = 1;
  auto tortoise = x0;
  auto hare = orbit.step(x0);
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = orbit.step(hare);
    ++lam;
  }
  // Preperiod: walk two pointers lam apart from the start.
  tortoise = x0;
  hare = x0;
  for (std::size_t i = 0; i < lam; ++i) hare = orbit.step(hare);
  std::size_t mu = 0;
  while (tortoise != hare) {
    tortoise = orbit.step(tortoise);
    hare = orbit.step(hare);
    ++mu;
  }
  return {mu, lam};
}

ModPProfile rational_degree_mod_p(const OrbitSource& source, std::uint64_t p) {
  ReducedOrbit orbit(source, p);
  const PrimeField& F = orbit.field();
  CycleStructure cs = cycle_structure(orbit);
  const std::size_t m = cs.preperiod, c = cs.period;
  std::vector<std::uint64_t> a = orbit.observable_sequence(m + c);

  // Phi = U + t^m V / (1 - t^c) = (U (1 - t^c) + t^m V) / (1 - t^c).
  FpPoly den;
  den.coeffs.assign(c + 1, 0);
  den.coeffs[0] = 1;
  den.coeffs[c] = F.neg(1);
  FpPoly num;
  num.coeffs.assign(m + c, 0);
  for (std::size_t i = 0; i < m; ++i) {
    num.coeffs[i] = F.add(num.coeffs[i], a[i]);
    num.coeffs[i + c] = F.sub(num.coeffs[i + c], a[i]);
  }
  for (std::size_t j = 0; j < c; ++j) num.coeffs[m + j] = F.add(num.coeffs[m + j], a[m + j]);
  num.trim();

  ModPProfile prof;
  prof.p = p;
  prof.preperiod = m;
  prof.period = c;
  prof.fraction = fp_reduce_fraction(F, std::move(num), std::move(den));
  prof.numerator_degree = static_cast<std::size_t>(std::max(prof.fraction.numerator.degree(), 0L));
  prof.denominator_degree = static_cast<std::size_t>(std::max(prof.fraction.denominator.degree(), 0L));
  prof.h_p = prof.fraction.degree();
  BigInt pr;
  mpz_ui_pow_ui(pr.get_mpz_t(), p, source.dimension());
  prof.bound_2pr = 2 * pr;
  return prof;
}

BerlekampMasseyResult berlekamp_massey_degree(std::span<const std::uint64_t> sequence,
                                              std::uint64_t p) {
  PrimeField F(p);
  const std::size_t n = sequence.size();
  std::vector<std::uint64_t> C{1}, B{1};
  std::size_t L = 0, shift = 1;
  std::uint64_t b = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t d = sequence[k] % p;
    for (std::size_t i = 1; i <= L && i < C.size(); ++i) d = F.add(d, F.mul(C[i], sequence[k - i] % p));
    if (d == 0) {
      ++shift;
      continue;
    }
    std::uint64_t coef = F.mul(d, F.inv(b));
    auto T = C;
    if (C.size() < B.size() + shift) C.resize(B.size() + shift, 0);
    for (std::size_t i = 0; i < B.size(); ++i) C[i + shift] = F.sub(C[i + shift], F.mul(coef, B[i]));
    if (2 * L <= k) {
      L = k + 1 - L;
      B = std::move(T);
      b = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  if (2 * L > n) {
    throw Error(Errc::InsufficientTerms, "linear complexity " + std::to_string(L) + " needs at least " +
                                             std::to_string(2 * L) + " terms, got " +
                                             std::to_string(n));
  }
  FpPoly conn{C};
  conn.trim();
  FpPoly seq;
  seq.coeffs.assign(sequence.begin(), sequence.begin() + static_cast<long>(std::min(L, n)));
  for (auto& x : seq.coeffs) x %= p;
  seq.trim();
  FpPoly num = fp_mul(F, conn, seq);
  if (num.coeffs.size() > L) num.coeffs.resize(L);
  num.trim();

  BerlekampMasseyResult out;
  out.order = L;
  out.fraction = FpFraction{std::move(num), std::move(conn)};
  out.degree = out.fraction.degree();
  return out;
}

DegreeSweep degree_profile_sweep(const OrbitSource& source, std::uint64_t p_max, unsigned threads) {
  const std::vector<BigInt> bad = bad_primes(source);
  DegreeSweep sweep;
  std::vector<std::uint64_t> good;
  for (std::uint64_t p : primes_up_to(p_max)) {
    if (std::binary_search(bad.begin(), bad.end(), BigInt(static_cast<unsigned long>(p)))) {
      sweep.skipped.push_back(p);
    } else {
      good.push_back(p);
    }
  }
  sweep.profiles.resize(good.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(good.size(), 1)));

  if (threads <= 1) {
    for (std::size_t i = 0; i < good.size(); ++i) sweep.profiles[i] = rational_degree_mod_p(source, good[i]);
    return sweep;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < good.size();) {
          sweep.profiles[i] = rational_degree_mod_p(source, good[i]);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return sweep;
}

void write_profile_csv(std::ostream& out, const DegreeSweep& sweep) {
  out << "p,m,c,deg_num,deg_den,h_p,bound_2pr\n";
  for (const auto& pr : sweep.profiles) {
    out << pr.p << ',' << pr.preperiod << ',' << pr.period << ',' << pr.numerator_degree << ','
        << pr.denominator_degree << ',' << pr.h_p << ',' << pr.bound_2pr.get_str() << '\n';
  }
}

}  // namespace arithdyn
