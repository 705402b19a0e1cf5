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

#ifndef ARITHDYN_MODP_HPP
#define ARITHDYN_MODP_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "arithdyn/dynamics.hpp"
#include "arithdyn/finite_field.hpp"

namespace arithdyn {

/// The triple (f, lambda, P) reduced modulo a good prime.
class ReducedOrbit {
 public:
  using State = std::vector<std::uint64_t>;

  /// Throws BadPrime if p divides a denominator of the model.
  ReducedOrbit(const OrbitSource& source, std::uint64_t p);

  const PrimeField& field() const { return field_; }
  std::size_t dimension() const { return map_.size(); }
  const State& start() const { return start_; }

  State step(const State& x) const;
  std::uint64_t observe(const State& x) const;

  /// lambda(f^n P) mod p for n < length.
  std::vector<std::uint64_t> observable_sequence(std::size_t length) const;

 private:
  PrimeField field_;
  std::vector<FpMultiPoly> map_;
  FpMultiPoly observable_;
  State start_;
};

struct CycleStructure {
  std::size_t preperiod = 0;  // m
  std::size_t period = 1;     // c
};

/// Minimal preperiod and period of the orbit of P in F_p^r (Brent).
CycleStructure cycle_structure(const ReducedOrbit& orbit);

struct ModPProfile {
  std::uint64_t p = 0;
  std::size_t preperiod = 0;
  std::size_t period = 1;
  std::size_t numerator_degree = 0;
  std::size_t denominator_degree = 0;
  std::size_t h_p = 0;
  BigInt bound_2pr;  // 2 p^r
  FpFraction fraction;
};

/// Phi mod p as a reduced rational function A/B, B(0) = 1, built from the
/// eventual periodicity Phi = U + t^m V / (1 - t^c). Throws BadPrime.
ModPProfile rational_degree_mod_p(const OrbitSource& source, std::uint64_t p);

struct BerlekampMasseyResult {
  std::size_t order = 0;  // linear complexity L
  std::size_t degree = 0;  // max(deg A, deg C) of the generating fraction
  FpFraction fraction;
};

/// Minimal linear recurrence of `sequence` over F_p and the fraction A/C
/// with C the connection polynomial. Throws InsufficientTerms unless the
/// sequence has at least 2L terms.
BerlekampMasseyResult berlekamp_massey_degree(std::span<const std::uint64_t> sequence,
                                              std::uint64_t p);

struct DegreeSweep {
  std::vector<ModPProfile> profiles;  // ascending p, good primes only
  std::vector<std::uint64_t> skipped;  // bad primes <= p_max
};

/// One profile per good prime p <= p_max. threads == 0 uses the hardware
/// concurrency; the result does not depend on the thread count.
DegreeSweep degree_profile_sweep(const OrbitSource& source, std::uint64_t p_max,
                                 unsigned threads = 0);

/// Columns p,m,c,deg_num,deg_den,h_p,bound_2pr.
void write_profile_csv(std::ostream& out, const DegreeSweep& sweep);

}  // namespace arithdyn

#endif  // ARITHDYN_MODP_HPP
