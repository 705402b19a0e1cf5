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

#include "arithdyn/classifier.hpp"

#include <algorithm>
#include <future>

namespace arithdyn {

std::string_view to_string(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::EventuallyPolynomial: return "EventuallyPolynomial";
    case ClassVerdict::GrowthEvidence: return "GrowthEvidence";
    case ClassVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string_view to_string(DetectionOutcome d) {
  switch (d) {
    case DetectionOutcome::Found: return "Found";
    case DetectionOutcome::NoneFound: return "NoneFound";
    case DetectionOutcome::InsufficientData: return "InsufficientData";
  }
  return "NoneFound";
}

std::size_t progression_data_requirement(std::size_t d_max, std::size_t g_max, std::size_t n0_max) {
  return n0_max + d_max * (g_max + 2);
}

namespace {

// First index k of residue class i (mod d) with k*d + i >= n0.
std::size_t class_start(std::size_t n0, std::size_t d, std::size_t i) {
  return n0 > i ? (n0 - i + d - 1) / d : 0;
}

std::vector<BigRational> class_values(std::span<const BigRational> c, std::size_t d, std::size_t i,
                                      std::size_t n0) {
  std::vector<BigRational> out;
  for (std::size_t N = class_start(n0, d, i) * d + i; N < c.size(); N += d) out.push_back(c[N]);
  return out;
}

// Smallest g <= g_max such that all (g+1)-st differences vanish, if any.
std::optional<std::size_t> polynomial_degree(std::vector<BigRational> values, std::size_t g_max) {
  for (std::size_t g = 0; g <= g_max; ++g) {
    if (values.size() < 2) return std::nullopt;
    for (std::size_t k = 0; k + 1 < values.size(); ++k) values[k] = values[k + 1] - values[k];
    values.pop_back();
    if (std::all_of(values.begin(), values.end(), [](const BigRational& v) { return v == 0; })) {
      return g;
    }
  }
  return std::nullopt;
}

// Newton forward interpolation through values[0..g] at k = k0, k0+1, ...
UPoly newton_polynomial(std::span<const BigRational> values, std::size_t g, std::size_t k0) {
  std::vector<BigRational> diffs(values.begin(), values.begin() + static_cast<long>(g + 1));
  UPoly result;
  UPoly binomial = UPoly::monomial(0);  // C(k - k0, j)
  for (std::size_t j = 0; j <= g; ++j) {
    result += binomial * diffs[0];
    for (std::size_t k = 0; k + 1 < diffs.size(); ++k) diffs[k] = diffs[k + 1] - diffs[k];
    diffs.pop_back();
    // C(x, j+1) = C(x, j) * (x - j) / (j + 1) with x = k - k0.
    BigRational shift(-static_cast<long>(k0 + j));
    UPoly factor(std::vector<BigRational>{shift, BigRational(1)});
    binomial = binomial * factor;
    binomial *= BigRational(1, static_cast<unsigned long>(j + 1));
  }
  return result;
}

struct Candidate {
  std::size_t max_degree = 0;
  std::size_t threshold = 0;
};

std::optional<ProgressionDecomposition> try_modulus(std::span<const BigRational> c, std::size_t d,
                                                    std::size_t g_max, std::size_t n0_max) {
  std::optional<Candidate> best;
  for (std::size_t n0 = 0; n0 <= n0_max; ++n0) {
    std::size_t worst = 0;
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      auto g = polynomial_degree(class_values(c, d, i, n0), g_max);
      if (!g) {
        ok = false;
      } else {
        worst = std::max(worst, *g);
      }
    }
    if (!ok) continue;
    if (!best || worst < best->max_degree) best = Candidate{worst, n0};
    if (best->max_degree == 0) break;
  }
  if (!best) return std::nullopt;

  ProgressionDecomposition dec;
  dec.modulus = d;
  dec.threshold = best->threshold;
  dec.max_degree = best->max_degree;
  dec.verified_range = c.empty() ? 0 : c.size() - 1;
  for (std::size_t i = 0; i < d; ++i) {
    auto values = class_values(c, d, i, best->threshold);
    auto g = polynomial_degree(values, g_max).value();
    dec.polynomials.push_back(newton_polynomial(values, g, class_start(best->threshold, d, i)));
  }
  if (!decomposition_matches(dec, c)) return std::nullopt;
  return dec;
}

}  // namespace

bool decomposition_matches(const ProgressionDecomposition& dec, std::span<const BigRational> c) {
  if (dec.modulus == 0 || dec.polynomials.size() != dec.modulus) return false;
  for (std::size_t N = dec.threshold; N < c.size(); ++N) {
    std::size_t i = N % dec.modulus;
    BigRational k(static_cast<unsigned long>((N - i) / dec.modulus));
    if (dec.polynomials[i].evaluate(k) != c[N]) return false;
  }
  return true;
}

std::optional<ProgressionDecomposition> detect_progressions(std::span<const BigRational> coefficients,
                                                            std::size_t d_max, std::size_t g_max,
                                                            std::size_t n0_max, unsigned threads) {
  if (d_max == 0) throw Error(Errc::InvalidArgument, "d_max must be positive");
  const std::size_t need = progression_data_requirement(d_max, g_max, n0_max);
  if (coefficients.size() < need) {
    throw Error(Errc::InsufficientData, "progression search needs " + std::to_string(need) +
                                            " coefficients, have " + std::to_string(coefficients.size()));
  }
  if (threads <= 1) {
    for (std::size_t d = 1; d <= d_max; ++d) {
      if (auto dec = try_modulus(coefficients, d, g_max, n0_max)) return dec;
    }
    return std::nullopt;
  }
  std::vector<std::future<std::optional<ProgressionDecomposition>>> jobs;
  for (std::size_t d = 1; d <= d_max; ++d) {
    jobs.push_back(std::async(std::launch::async, [=] { return try_modulus(coefficients, d, g_max, n0_max); }));
  }
  std::optional<ProgressionDecomposition> found;
  for (auto& job : jobs) {
    auto dec = job.get();
    if (!found && dec) found = std::move(dec);
  }
  return found;
}

Classification classify(const OrbitSource& source, const ClassifyBudgets& budgets) {
  std::size_t need = progression_data_requirement(budgets.d_max, budgets.g_max, budgets.n0_max);
  std::size_t last = std::max(budgets.steps, need > 0 ? need - 1 : 0);
  CoefficientSeries series = CoefficientSeries::from_orbit(source, last, budgets.bit_budget);
  return classify(series, budgets);
}

Classification classify(CoefficientSeries& series, const ClassifyBudgets& budgets) {
  Classification out;
  out.budgets = budgets;
  out.dimension = series.source() ? series.source()->dimension() : 1;
  std::size_t need = progression_data_requirement(budgets.d_max, budgets.g_max, budgets.n0_max);
  series.extend_to(std::max(budgets.steps, need > 0 ? need - 1 : 0));
  out.overflow = series.overflow();
  out.coefficients_computed = series.size();

  try {
    out.decomposition = detect_progressions(series.coefficients(), budgets.d_max, budgets.g_max,
                                            budgets.n0_max, budgets.threads);
    out.detection = out.decomposition ? DetectionOutcome::Found : DetectionOutcome::NoneFound;
  } catch (const Error& e) {
    if (e.code() != Errc::InsufficientData) throw;
    out.detection = DetectionOutcome::InsufficientData;
  }
  if (out.decomposition) {
    out.verdict = ClassVerdict::EventuallyPolynomial;
    return out;
  }

  try {
    auto heights = observable_heights(series);
    out.growth = growth_estimate(heights, budgets.n_min, out.dimension);
  } catch (const Error& e) {
    if (e.code() != Errc::InsufficientData) throw;
  }
  bool ratio_hit = out.growth && out.growth->sup_ratio >= out.growth->verdict_threshold;
  out.verdict = (ratio_hit || out.overflow) ? ClassVerdict::GrowthEvidence : ClassVerdict::Inconclusive;
  return out;
}

OrbitSource recurrence_to_spec(const Polynomial& p, std::span<const BigInt> seeds) {
  const std::size_t r = seeds.size();
  if (r == 0) throw Error(Errc::ArityMismatch, "recurrence needs at least one seed");
  if (p.arity() != r) {
    throw Error(Errc::ArityMismatch, "recurrence polynomial has " + std::to_string(p.arity()) +
                                         " variables but " + std::to_string(r) + " seeds were given");
  }
  if (!p.has_integer_coefficients()) {
    throw Error(Errc::InvalidArgument, "recurrence polynomial must have integer coefficients");
  }
  std::vector<Polynomial> coords;
  for (std::size_t i = 1; i < r; ++i) coords.push_back(Polynomial::variable(r, i));
  coords.push_back(p);
  std::vector<BigRational> start;
  for (const auto& s : seeds) start.emplace_back(s);
  return OrbitSource{PolySelfMap(std::move(coords)), Observable::coordinate(r, 0), std::move(start)};
}

}  // namespace arithdyn
