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

#include "arithdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace arithdyn {

void OrbitSource::validate() const {
  const std::size_t r = map.arity();
  if (observable.arity() != r) throw Error(Errc::ArityMismatch, "observable arity != map dimension");
  if (start.size() != r) throw Error(Errc::ArityMismatch, "start point dimension != map dimension");
}

OrbitOverflowError::OrbitOverflowError(OrbitOverflow info)
    : Error(Errc::OrbitOverflow, "orbit exceeds bit budget at n=" + std::to_string(info.index) +
                                     " (" + std::to_string(info.bits) + " bits)"),
      info_(info) {}

RepeatedPointError::RepeatedPointError(std::size_t first, std::size_t second)
    : Error(Errc::RepeatedPoint, "orbit repeats: f^" + std::to_string(first) + "P = f^" +
                                     std::to_string(second) + "P"),
      first_(first),
      second_(second) {}

namespace {

std::size_t max_bits(std::span<const BigRational> point) {
  std::size_t b = 0;
  for (const auto& x : point) b = std::max(b, bit_size(x));
  return b;
}

OrbitRecord make_record(std::size_t n, std::vector<BigRational> point, BigRational value) {
  OrbitRecord rec;
  rec.index = n;
  rec.point_height = height_affine(point);
  rec.observable_height = height_rational(value);
  rec.point = std::move(point);
  rec.observable_value = std::move(value);
  return rec;
}

void collect_denominator_primes(const BigInt& den, std::set<BigInt>& out) {
  if (den == 1) return;
  for (const auto& [p, e] : factorize(den)) out.insert(p);
}

}  // namespace

Orbit iterate(const PolySelfMap& f, std::span<const BigRational> start, std::size_t steps,
              std::size_t bit_budget, const Observable* observable) {
  if (start.size() != f.arity()) throw Error(Errc::ArityMismatch, "start point dimension != map dimension");
  Observable first = Observable::coordinate(f.arity(), 0);
  const Observable& lambda = observable ? *observable : first;
  if (lambda.arity() != f.arity()) throw Error(Errc::ArityMismatch, "observable arity != map dimension");

  Orbit orbit;
  std::vector<BigRational> point(start.begin(), start.end());
  for (std::size_t n = 0;; ++n) {
    BigRational value = lambda(point);
    std::size_t bits = std::max(max_bits(point), bit_size(value));
    if (bits > bit_budget) {
      orbit.overflow = OrbitOverflow{n, bits};
      break;
    }
    std::vector<BigRational> next;
    if (n < steps) next = f.apply(point);
    orbit.records.push_back(make_record(n, std::move(point), std::move(value)));
    if (n == steps) break;
    point = std::move(next);
  }
  return orbit;
}

std::vector<BigInt> bad_primes(const OrbitSource& source) {
  std::set<BigInt> primes;
  for (const auto& coord : source.map.coordinates()) {
    for (const auto& [e, c] : coord.terms()) collect_denominator_primes(c.get_den(), primes);
  }
  for (const auto& [e, c] : source.observable.polynomial().terms()) {
    collect_denominator_primes(c.get_den(), primes);
  }
  for (const auto& x : source.start) collect_denominator_primes(x.get_den(), primes);
  return {primes.begin(), primes.end()};
}

// ---------------------------------------------------------------------------
// CoefficientSeries

CoefficientSeries CoefficientSeries::from_orbit(OrbitSource source, std::size_t last_index,
                                                std::size_t bit_budget) {
  source.validate();
  CoefficientSeries s;
  s.bad_primes_ = arithdyn::bad_primes(source);
  s.bit_budget_ = bit_budget;
  s.source_ = std::move(source);
  s.extend_to(last_index);
  return s;
}

CoefficientSeries CoefficientSeries::from_coefficients(std::vector<BigRational> coefficients) {
  CoefficientSeries s;
  std::set<BigInt> primes;
  for (const auto& c : coefficients) collect_denominator_primes(c.get_den(), primes);
  s.bad_primes_.assign(primes.begin(), primes.end());
  s.coefficients_ = std::move(coefficients);
  return s;
}

bool CoefficientSeries::is_bad_prime(std::uint64_t p) const {
  return std::binary_search(bad_primes_.begin(), bad_primes_.end(), BigInt(static_cast<unsigned long>(p)));
}

bool CoefficientSeries::extend_to(std::size_t last_index) {
  if (coefficients_.size() > last_index) return true;
  if (!source_ || overflow_) return false;
  const OrbitSource& src = *source_;
  while (coefficients_.size() <= last_index) {
    std::vector<BigRational> point =
        points_.empty() ? src.start : src.map.apply(points_.back());
    BigRational value = src.observable(point);
    std::size_t bits = std::max(max_bits(point), bit_size(value));
    if (bits > bit_budget_) {
      overflow_ = OrbitOverflow{coefficients_.size(), bits};
      return false;
    }
    points_.push_back(std::move(point));
    coefficients_.push_back(std::move(value));
  }
  return true;
}

void CoefficientSeries::require(std::size_t last_index) {
  if (extend_to(last_index)) return;
  if (overflow_) throw OrbitOverflowError(*overflow_);
  throw Error(Errc::InsufficientData, "series has " + std::to_string(coefficients_.size()) +
                                          " coefficients, need index " + std::to_string(last_index));
}

// ---------------------------------------------------------------------------
// Growth

GrowthEstimate growth_estimate(std::span<const HeightValue> heights, std::size_t n_min,
                               std::size_t dimension) {
  if (dimension == 0) throw Error(Errc::InvalidArgument, "dimension must be positive");
  GrowthEstimate g;
  g.n_min = n_min;
  g.n_max = heights.empty() ? 0 : heights.size() - 1;
  g.verdict_threshold = 1.0 / static_cast<double>(dimension);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  bool have = false;
  for (std::size_t n = std::max<std::size_t>(n_min, 2); n < heights.size(); ++n) {
    if (heights[n].multiplicative <= 1) continue;
    double log_h = std::log(heights[n].logarithmic);
    double ratio = log_h / std::log(static_cast<double>(n));
    if (!have || ratio > g.sup_ratio) {
      g.sup_ratio = ratio;
      g.sup_index = n;
      have = true;
    }
    double x = static_cast<double>(n);
    sx += x;
    sy += log_h;
    sxx += x * x;
    sxy += x * log_h;
    ++g.usable_indices;
  }
  if (g.usable_indices < 3) {
    throw Error(Errc::InsufficientData, "growth estimate needs at least 3 indices with nonzero height");
  }
  double k = static_cast<double>(g.usable_indices);
  double denom = k * sxx - sx * sx;
  g.exp_slope = denom == 0 ? 0.0 : (k * sxy - sx * sy) / denom;
  return g;
}

std::vector<HeightValue> observable_heights(const CoefficientSeries& series) {
  std::vector<HeightValue> out;
  out.reserve(series.size());
  for (const auto& c : series.coefficients()) out.push_back(height_rational(c));
  return out;
}

std::vector<TrivialBoundRow> trivial_bound_check(std::span<const OrbitRecord> orbit,
                                                 std::size_t dimension) {
  std::map<std::vector<BigRational>, std::size_t> seen;
  for (const auto& rec : orbit) {
    for (const auto& x : rec.point) {
      if (!is_integer(x)) {
        throw Error(Errc::NonIntegerOrbit, "f^" + std::to_string(rec.index) + "P is not integral");
      }
    }
    auto [it, inserted] = seen.emplace(rec.point, rec.index);
    if (!inserted) throw RepeatedPointError(it->second, rec.index);
  }

  std::vector<TrivialBoundRow> rows;
  rows.reserve(orbit.size());
  BigInt running(1);
  for (const auto& rec : orbit) {
    if (rec.point_height.multiplicative > running) running = rec.point_height.multiplicative;
    BigInt lhs;
    BigInt base = 2 * running + 1;
    mpz_pow_ui(lhs.get_mpz_t(), base.get_mpz_t(), dimension);
    rows.push_back({rec.index, lhs > BigInt(static_cast<unsigned long>(rec.index))});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Cache

void write_orbit_cache(std::ostream& out, const CoefficientSeries& series) {
  const auto& pts = series.points();
  for (std::size_t n = 0; n < pts.size(); ++n) {
    out << n << '\t';
    for (std::size_t i = 0; i < pts[n].size(); ++i) {
      if (i) out << ' ';
      out << to_fraction_string(pts[n][i]);
    }
    out << '\t' << to_fraction_string(series[n]) << '\n';
  }
}

std::pair<std::vector<std::vector<BigRational>>, std::vector<BigRational>> read_orbit_cache(
    std::istream& in, std::size_t dimension) {
  std::vector<std::vector<BigRational>> points;
  std::vector<BigRational> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto bad = [&](const std::string& why) {
      return Error(Errc::SpecError, "orbit cache line " + std::to_string(lineno) + ": " + why);
    };
    auto t1 = line.find('\t');
    auto t2 = line.find('\t', t1 == std::string::npos ? t1 : t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) throw bad("expected three tab-separated fields");
    if (line.substr(0, t1) != std::to_string(points.size())) throw bad("records out of order");
    std::istringstream coords(line.substr(t1 + 1, t2 - t1 - 1));
    std::vector<BigRational> point;
    std::string tok;
    try {
      while (coords >> tok) point.push_back(parse_rational(tok));
      values.push_back(parse_rational(line.substr(t2 + 1)));
    } catch (const Error& e) {
      throw bad(e.what());
    }
    if (point.size() != dimension) throw bad("wrong number of coordinates");
    points.push_back(std::move(point));
  }
  return {std::move(points), std::move(values)};
}

std::optional<CoefficientSeries> series_from_cache(const OrbitSource& source,
                                                   std::vector<std::vector<BigRational>> points,
                                                   std::vector<BigRational> coefficients,
                                                   std::size_t bit_budget) {
  source.validate();
  if (points.empty() || points.size() != coefficients.size()) return std::nullopt;
  if (points.front() != source.start) return std::nullopt;
  if (source.observable(points.front()) != coefficients.front()) return std::nullopt;
  if (points.size() >= 2) {
    const auto& prev = points[points.size() - 2];
    if (source.map.apply(prev) != points.back()) return std::nullopt;
    if (source.observable(points.back()) != coefficients.back()) return std::nullopt;
  }
  for (std::size_t n = 0; n < points.size(); ++n) {
    if (std::max(max_bits(points[n]), bit_size(coefficients[n])) > bit_budget) {
      points.resize(n);
      coefficients.resize(n);
      break;
    }
  }
  CoefficientSeries s;
  s.bad_primes_ = bad_primes(source);
  s.bit_budget_ = bit_budget;
  s.source_ = source;
  s.points_ = std::move(points);
  s.coefficients_ = std::move(coefficients);
  return s;
}

}  // namespace arithdyn
