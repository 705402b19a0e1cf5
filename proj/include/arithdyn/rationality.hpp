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

#ifndef ARITHDYN_RATIONALITY_HPP
#define ARITHDYN_RATIONALITY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "arithdyn/dynamics.hpp"
#include "arithdyn/modp.hpp"
#include "arithdyn/polynomial.hpp"

namespace arithdyn {

/// P/Q with Q F - P = 0 mod t^(contact_order + 1), gcd(P, Q) = 1, Q(0) = 1.
struct PadeApproximant {
  UPoly numerator;
  UPoly denominator;
  std::size_t contact_order = 0;
};

/// Q F - P mod t^(N+1) coefficients, i.e. the defect of an approximant
/// against the first N+1 terms of F.
UPoly pade_defect(const UPoly& numerator, const UPoly& denominator,
                  std::span<const BigRational> series);

/// Largest N such that Q F - P = 0 mod t^(N+1) over the given terms, or
/// nullopt if even the constant term disagrees.
std::optional<std::size_t> contact_order(const UPoly& numerator, const UPoly& denominator,
                                         std::span<const BigRational> series);

/// Approximant with deg P <= num_max, deg Q <= den_max for the truncation
/// F_{/N} (N = truncation.size() - 1), computed by the extended Euclidean
/// algorithm on (t^(N+1), F_{/N}). Throws DegreeSplitInfeasible if
/// N + 1 < num_max + den_max + 1, and NoSolution if the reduced denominator
/// vanishes at t = 0.
PadeApproximant pade_via_euclid(std::span<const BigRational> truncation, std::size_t num_max,
                                std::size_t den_max);

/// 1/2 ln((1 + eta) L) + (1/eta) h_trunc; throws NonIntegralEtaL unless eta*L is an integer.
double siegel_height_bound(std::size_t L, const BigRational& eta, double h_trunc);

/// h(F_{/n}); the all-zero truncation has height 0.
HeightValue truncation_height(CoefficientSeries& series, std::size_t n);

struct RationalVerdict {
  UPoly numerator;
  UPoly denominator;
  std::size_t verified_order = 0;
  std::vector<std::uint64_t> primes_checked;
  std::vector<std::uint64_t> primes_skipped;
};

struct UndecidedVerdict {
  std::size_t max_contact = 0;
  std::string reason;
};

using RationalityVerdict = std::variant<RationalVerdict, UndecidedVerdict>;

/// Reduced fraction of Phi mod p: the cycle construction for orbit series,
/// Berlekamp-Massey on the known terms otherwise. nullopt if p is bad.
std::optional<FpFraction> series_fraction_mod_p(CoefficientSeries& series, std::uint64_t p);

/// Semi-decision for rationality. Builds an approximant at order (2+eta)L,
/// then accepts only if Q F - P vanishes through t^N_verify and, for every
/// sampled good prime, (P mod p)/(Q mod p) reduces to the fraction of
/// Phi mod p. Never claims irrationality. Extending an orbit series past its
/// bit budget throws OrbitOverflowError.
RationalityVerdict check_rationality(CoefficientSeries& series, std::size_t L,
                                     std::size_t N_verify,
                                     std::span<const std::uint64_t> sample_primes,
                                     const BigRational& eta = BigRational(1));

enum class CriterionVerdict { ProvedHolds, FailsWithinBudget };
enum class BoundStatus { Holds, Fails, Undetermined };

std::string_view to_string(CriterionVerdict v);
std::string_view to_string(BoundStatus s);

struct CriterionRow {
  std::size_t n = 0;
  double lhs = 0.0;  // sum of ln p over good p <= P_max with h_p < n/(2+eta)
  double rhs = 0.0;  // 3/2 ln n + (1 + 1/eta) h(F_{/n})
  bool lhs_is_lower_bound = true;
  CriterionVerdict verdict = CriterionVerdict::FailsWithinBudget;
};

/// h(Phi_{/n}) >= (1/3)(n/6)^(1/r), compared with certified log enclosures.
struct GrowthLowerBoundRow {
  std::size_t n = 0;
  double h_trunc = 0.0;
  double threshold = 0.0;
  BoundStatus status = BoundStatus::Undetermined;
};

struct CriterionReport {
  BigRational eta{1};
  std::uint64_t prime_budget = 0;
  std::vector<CriterionRow> rows;
  std::vector<GrowthLowerBoundRow> growth_rows;
  std::vector<std::uint64_t> skipped_primes;
};

/// Evaluates the prime-sum inequality at each n. The left side only counts
/// primes up to P_max, so it underestimates the full sum: ProvedHolds is a
/// certificate, FailsWithinBudget is not. Requires an orbit series.
CriterionReport criterion_check(CoefficientSeries& series, const BigRational& eta,
                                std::span<const std::size_t> n_values, std::uint64_t p_max,
                                unsigned threads = 0);

/// As above with a precomputed degree sweep (must cover p_max).
CriterionReport criterion_check(CoefficientSeries& series, const BigRational& eta,
                                std::span<const std::size_t> n_values, std::uint64_t p_max,
                                const DegreeSweep& sweep);

/// Windowed estimate of the radius-plus-prime-density functional. Every
/// field is an estimate; `caveats` says which.
struct RuzsaEstimate {
  double archimedean_log_radius = 0.0;
  double finite_radius_lower_bound = 0.0;
  double liminf_window_estimate = 0.0;
  double total = 0.0;
  std::size_t window_min = 0;
  std::size_t window_max = 0;
  std::vector<std::string> caveats;
};

RuzsaEstimate ruzsa_functional(CoefficientSeries& series, std::size_t window_min,
                               std::size_t window_max, std::uint64_t p_max, unsigned threads = 0);

}  // namespace arithdyn

#endif  // ARITHDYN_RATIONALITY_HPP
