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

#ifndef ARITHDYN_CLASSIFIER_HPP
#define ARITHDYN_CLASSIFIER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "arithdyn/dynamics.hpp"
#include "arithdyn/polynomial.hpp"

namespace arithdyn {

/// c_N = polynomials[i]((N - i) / modulus) for every computed N >= threshold
/// with N = i (mod modulus).
struct ProgressionDecomposition {
  std::size_t modulus = 1;
  std::size_t threshold = 0;
  std::vector<UPoly> polynomials;
  std::size_t max_degree = 0;
  std::size_t verified_range = 0;  // highest index checked
};

/// Coefficients needed by detect_progressions: n0_max + d_max (g_max + 2).
std::size_t progression_data_requirement(std::size_t d_max, std::size_t g_max, std::size_t n0_max);

/// Searches d = 1..d_max in order and returns the first modulus admitting a
/// decomposition with every class polynomial of degree <= g_max beyond some
/// threshold n0 <= n0_max. Within a modulus the smallest maximal degree wins,
/// then the smallest threshold. Polynomials come from Newton forward
/// differences and are checked against every coefficient >= n0.
/// Returns nullopt (NoneFound) if no modulus works; throws InsufficientData
/// when there are too few coefficients to run the search at all.
std::optional<ProgressionDecomposition> detect_progressions(std::span<const BigRational> coefficients,
                                                            std::size_t d_max, std::size_t g_max,
                                                            std::size_t n0_max, unsigned threads = 1);

/// True iff `dec` reproduces every coefficient from its threshold on.
bool decomposition_matches(const ProgressionDecomposition& dec,
                           std::span<const BigRational> coefficients);

struct ClassifyBudgets {
  std::size_t steps = 64;
  std::size_t bit_budget = kDefaultBitBudget;
  std::size_t d_max = 8;
  std::size_t g_max = 8;
  std::size_t n0_max = 16;
  std::size_t n_min = 5;
  unsigned threads = 1;
};

enum class ClassVerdict { EventuallyPolynomial, GrowthEvidence, Inconclusive };
enum class DetectionOutcome { Found, NoneFound, InsufficientData };

std::string_view to_string(ClassVerdict v);
std::string_view to_string(DetectionOutcome d);

struct Classification {
  ClassVerdict verdict = ClassVerdict::Inconclusive;
  DetectionOutcome detection = DetectionOutcome::NoneFound;
  std::optional<ProgressionDecomposition> decomposition;
  std::optional<GrowthEstimate> growth;
  std::optional<OrbitOverflow> overflow;
  std::size_t dimension = 1;
  std::size_t coefficients_computed = 0;
  ClassifyBudgets budgets;
};

/// Eventually polynomial on progressions if detect_progressions succeeds;
/// otherwise growth evidence if the window ratio reaches 1/r or the orbit
/// overflowed its bit budget; otherwise inconclusive. The orbit is iterated
/// to max(steps, progression_data_requirement - 1) so the search can run.
Classification classify(const OrbitSource& source, const ClassifyBudgets& budgets);
Classification classify(CoefficientSeries& series, const ClassifyBudgets& budgets);

/// Builds (x_1, ..., x_r) -> (x_2, ..., x_r, p(x_1, ..., x_r)) with
/// lambda = x_1 and P = (A(0), ..., A(r-1)), so c_n = A(n). Variable i of p
/// is the state coordinate x_i, i.e. A(n + i - 1). Throws ArityMismatch if
/// p has arity != seeds.size() and InvalidArgument for non-integral p.
OrbitSource recurrence_to_spec(const Polynomial& p, std::span<const BigInt> seeds);

}  // namespace arithdyn

#endif  // ARITHDYN_CLASSIFIER_HPP
