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

#ifndef ARITHDYN_DYNAMICS_HPP
#define ARITHDYN_DYNAMICS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "arithdyn/heights.hpp"
#include "arithdyn/polynomial.hpp"

namespace arithdyn {

inline constexpr std::size_t kDefaultBitBudget = 1'000'000;

/// The triple (f, lambda, P).
struct OrbitSource {
  PolySelfMap map;
  Observable observable;
  std::vector<BigRational> start;

  /// Throws ArityMismatch unless all three agree on r.
  void validate() const;
  std::size_t dimension() const { return map.arity(); }
};

struct OrbitRecord {
  std::size_t index = 0;
  std::vector<BigRational> point;
  HeightValue point_height;  // h_aff(f^n P)
  BigRational observable_value;
  HeightValue observable_height;
};

/// Raised when f^n P would have a numerator or denominator wider than the
/// bit budget. This is the signature of doubly exponential growth.
struct OrbitOverflow {
  std::size_t index = 0;  // first index that was not computed
  std::size_t bits = 0;   // its bit size
};

class OrbitOverflowError : public Error {
 public:
  explicit OrbitOverflowError(OrbitOverflow info);
  const OrbitOverflow& info() const { return info_; }

 private:
  OrbitOverflow info_;
};

class RepeatedPointError : public Error {
 public:
  RepeatedPointError(std::size_t first, std::size_t second);
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_, second_;
};

/// Records 0..steps, or the prefix computed before the bit budget tripped.
struct Orbit {
  std::vector<OrbitRecord> records;
  std::optional<OrbitOverflow> overflow;
};

/// Iterates f from P. The observable defaults to the first coordinate.
Orbit iterate(const PolySelfMap& f, std::span<const BigRational> start, std::size_t steps,
              std::size_t bit_budget = kDefaultBitBudget, const Observable* observable = nullptr);

/// Primes dividing a denominator of a coefficient of f or lambda, or of a
/// coordinate of P, ascending. Outside these primes the triple reduces.
std::vector<BigInt> bad_primes(const OrbitSource& source);

/// Phi = sum lambda(f^n P) t^n as a cached coefficient oracle.
///
/// Series built from an orbit can be extended on demand; series built from
/// an explicit coefficient list cannot.
class CoefficientSeries {
 public:
  static CoefficientSeries from_orbit(OrbitSource source, std::size_t last_index,
                                      std::size_t bit_budget = kDefaultBitBudget);
  /// Explicit coefficients; bad primes are the primes dividing their denominators.
  static CoefficientSeries from_coefficients(std::vector<BigRational> coefficients);

  const std::vector<BigRational>& coefficients() const { return coefficients_; }
  std::size_t size() const { return coefficients_.size(); }
  const BigRational& operator[](std::size_t n) const { return coefficients_.at(n); }

  const std::optional<OrbitSource>& source() const { return source_; }
  const std::vector<BigInt>& bad_primes() const { return bad_primes_; }
  bool is_bad_prime(std::uint64_t p) const;
  const std::optional<OrbitOverflow>& overflow() const { return overflow_; }
  std::size_t bit_budget() const { return bit_budget_; }

  /// Makes coefficients 0..last_index available. Returns false if the series
  /// cannot reach that far (no source, or overflow).
  bool extend_to(std::size_t last_index);
  /// As extend_to, but throws OrbitOverflowError / InsufficientData.
  void require(std::size_t last_index);

  /// Point f^n P for computed n (orbit series only).
  const std::vector<std::vector<BigRational>>& points() const { return points_; }

 private:
  friend std::optional<CoefficientSeries> series_from_cache(
      const OrbitSource& source, std::vector<std::vector<BigRational>> points,
      std::vector<BigRational> coefficients, std::size_t bit_budget);

  CoefficientSeries() = default;

  std::vector<BigRational> coefficients_;
  std::vector<std::vector<BigRational>> points_;
  std::optional<OrbitSource> source_;
  std::vector<BigInt> bad_primes_;
  std::optional<OrbitOverflow> overflow_;
  std::size_t bit_budget_ = kDefaultBitBudget;
};

/// Window surrogate for limsup ln h(c_n) / ln n.
struct GrowthEstimate {
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  double sup_ratio = 0.0;
  std::size_t sup_index = 0;
  /// Least-squares slope of ln h(c_n) against n (exponential-height diagnostic).
  double exp_slope = 0.0;
  double verdict_threshold = 1.0;
  std::size_t usable_indices = 0;
};

/// heights[n] is h(c_n). Indices n < max(n_min, 2) and zero heights are
/// skipped; fewer than three usable indices throws InsufficientData.
GrowthEstimate growth_estimate(std::span<const HeightValue> heights, std::size_t n_min,
                               std::size_t dimension);

/// Observable heights of a series, indexed by n.
std::vector<HeightValue> observable_heights(const CoefficientSeries& series);

struct TrivialBoundRow {
  std::size_t n = 0;
  bool holds = false;
};

/// Checks (2 H_n + 1)^r > n with H_n = max_{i<=n} exp h_aff(f^i P), exactly.
/// Throws NonIntegerOrbit, or RepeatedPointError if the prefix is not injective.
std::vector<TrivialBoundRow> trivial_bound_check(std::span<const OrbitRecord> orbit,
                                                 std::size_t dimension);

/// Orbit cache: one line per record, "n\tcoord_1 ... coord_r\tc_n" with every
/// rational written as "num/den".
void write_orbit_cache(std::ostream& out, const CoefficientSeries& series);
/// Parses a cache; returns (points, coefficients). Throws SpecError on malformed input.
std::pair<std::vector<std::vector<BigRational>>, std::vector<BigRational>> read_orbit_cache(
    std::istream& in, std::size_t dimension);

/// Builds a series from cached records, checking that record 0 is P and
/// that the last cached step is f applied to the previous point. Returns
/// nullopt if the cache does not belong to this source.
std::optional<CoefficientSeries> series_from_cache(
    const OrbitSource& source, std::vector<std::vector<BigRational>> points,
    std::vector<BigRational> coefficients, std::size_t bit_budget);

}  // namespace arithdyn

#endif  // ARITHDYN_DYNAMICS_HPP
