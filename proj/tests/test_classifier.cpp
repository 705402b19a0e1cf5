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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "arithdyn/classifier.hpp"
#include "arithdyn/rationality.hpp"
#include "oracles.hpp"

using namespace arithdyn;

namespace {

OrbitSource source(std::vector<std::string> map, std::string lambda, std::vector<BigRational> start) {
  std::vector<std::string> vars{"x", "y", "z"};
  vars.resize(map.size());
  std::vector<Polynomial> coords;
  for (const auto& m : map) coords.push_back(parse_polynomial(m, vars));
  return OrbitSource{PolySelfMap(coords), Observable(parse_polynomial(lambda, vars)), std::move(start)};
}

std::vector<BigRational> sequence(std::size_t n, auto f) {
  std::vector<BigRational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f(static_cast<long>(i)));
  return v;
}

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// (1 - t^d)^(g+1) as a dense coefficient vector.
std::vector<BigRational> cyclotomic_power(std::size_t d, std::size_t g) {
  std::vector<BigRational> base(d + 1);
  base[0] = 1;
  base[d] = -1;
  std::vector<BigRational> out{1};
  for (std::size_t i = 0; i <= g; ++i) out = oracle::poly_mul(out, base);
  return out;
}

}  // namespace

TEST_CASE("data requirement") {
  CHECK(progression_data_requirement(8, 8, 16) == 16 + 8 * 10);
  CHECK(progression_data_requirement(1, 0, 0) == 2);
}

TEST_CASE("detect_progressions examples") {
  auto sq = sequence(100, [](long n) { return BigRational(n * n); });
  auto d = detect_progressions(sq, 8, 8, 16);
  REQUIRE(d);
  CHECK(d->modulus == 1);
  CHECK(d->threshold == 0);
  CHECK(d->polynomials[0] == UPoly({0, 0, 1}));
  CHECK(d->max_degree == 2);

  auto alt = sequence(100, [](long n) { return BigRational(n % 2 == 0 ? n : -n); });
  auto a = detect_progressions(alt, 8, 8, 16);
  REQUIRE(a);
  CHECK(a->modulus == 2);
  CHECK(a->polynomials[0] == UPoly({0, 2}));
  CHECK(a->polynomials[1] == UPoly({-1, -2}));

  std::vector<BigRational> fib;
  for (const auto& x : oracle::fibonacci(99)) fib.emplace_back(x);
  CHECK_FALSE(detect_progressions(fib, 8, 8, 16));

  try {
    detect_progressions(std::span(fib).first(50), 8, 8, 16);
    FAIL("expected InsufficientData");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InsufficientData);
  }
}

TEST_CASE("threshold and tie-breaking") {
  // Garbage before n = 5, then n^3.
  auto v = sequence(100, [](long n) { return n < 5 ? BigRational(1000 + 7 * n * n * n * n) : BigRational(n * n * n); });
  auto d = detect_progressions(v, 8, 8, 16);
  REQUIRE(d);
  CHECK(d->modulus == 1);
  CHECK(d->threshold <= 5);
  CHECK(decomposition_matches(*d, v));

  // Period 2 data is also period 4; the smaller modulus wins.
  auto p = sequence(100, [](long n) { return BigRational(n % 2 ? 3 : 8); });
  auto e = detect_progressions(p, 8, 8, 16);
  REQUIRE(e);
  CHECK(e->modulus == 2);
  CHECK(e->max_degree == 0);
}

TEST_CASE("exactness, minimality and consistency with rationality") {
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<int> c(-5, 5), dd(1, 4), gg(0, 3), nn(0, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = dd(rng), g = gg(rng), n0 = nn(rng);
    std::vector<UPoly> polys;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<BigRational> coeffs(g + 1);
      for (auto& x : coeffs) x = c(rng);
      polys.emplace_back(coeffs);
    }
    std::vector<BigRational> data;
    for (std::size_t n = 0; n < 120; ++n) {
      if (n < n0) data.push_back(BigRational(500 + static_cast<long>(n * n * n)));
      else data.push_back(polys[n % d].evaluate(BigRational(static_cast<long>(n / d))));
    }
    auto found = detect_progressions(data, 8, 8, 16, trial % 2 ? 4 : 1);
    REQUIRE(found);
    CHECK(found->modulus <= d);
    CHECK(decomposition_matches(*found, data));
    for (std::size_t n = found->threshold; n < data.size(); ++n) {
      std::size_t i = n % found->modulus;
      CHECK(found->polynomials[i].evaluate(BigRational(static_cast<long>(n / found->modulus))) == data[n]);
    }
    // No smaller modulus works within the same budgets.
    for (std::size_t dp = 1; dp < found->modulus; ++dp) {
      CHECK_FALSE(detect_progressions(data, dp, 8, 16));
    }

    auto series = CoefficientSeries::from_coefficients(data);
    std::vector<std::uint64_t> primes{101, 103, 107};
    auto v = check_rationality(series, 16, 119, primes);
    auto* r = std::get_if<RationalVerdict>(&v);
    REQUIRE(r);
    auto target = cyclotomic_power(found->modulus, found->max_degree);
    // Use the threshold-free tail: the pre-threshold part only adds to the numerator.
    auto rem = oracle::poly_rem(target, r->denominator.coefficients());
    CHECK(rem.empty());
  }
}

TEST_CASE("classify examples") {
  ClassifyBudgets b;
  auto tr = classify(source({"x + 1"}, "x", {0}), b);
  CHECK(tr.verdict == ClassVerdict::EventuallyPolynomial);
  REQUIRE(tr.decomposition);
  CHECK(tr.decomposition->modulus == 1);
  CHECK(tr.decomposition->polynomials[0] == UPoly({0, 1}));
  CHECK(tr.coefficients_computed >= progression_data_requirement(8, 8, 16));

  ClassifyBudgets small;
  small.steps = 20;
  small.d_max = 2;
  small.g_max = 2;
  small.n0_max = 2;
  auto sq = classify(source({"x^2 + 1"}, "x", {0}), small);
  CHECK(sq.verdict == ClassVerdict::GrowthEvidence);
  REQUIRE(sq.growth);
  CHECK(sq.growth->n_min == 5);
  CHECK(sq.growth->sup_ratio >= 1.0);

  auto sw = classify(source({"y", "x"}, "x", {2, 3}), b);
  CHECK(sw.verdict == ClassVerdict::EventuallyPolynomial);
  REQUIRE(sw.decomposition);
  CHECK(sw.decomposition->modulus == 2);
  CHECK(sw.decomposition->polynomials[0] == UPoly({2}));
  CHECK(sw.decomposition->polynomials[1] == UPoly({3}));

  auto fib = classify(source({"y", "x + y"}, "x", {0, 1}), b);
  CHECK(fib.detection == DetectionOutcome::NoneFound);
  CHECK(fib.verdict == ClassVerdict::GrowthEvidence);
  CHECK(fib.growth->sup_ratio >= 0.5);

  // Overflow before the data requirement: InsufficientData, growth evidence from the overflow.
  ClassifyBudgets tight = b;
  tight.bit_budget = 2000;
  auto ov = classify(source({"x^2 + 1"}, "x", {0}), tight);
  CHECK(ov.detection == DetectionOutcome::InsufficientData);
  CHECK(ov.overflow);
  CHECK(ov.verdict == ClassVerdict::GrowthEvidence);
}

TEST_CASE("recurrence construction") {
  std::vector<std::string> T2{"T1", "T2"};
  auto fib = recurrence_to_spec(parse_polynomial("T1 + T2", T2), ints({0, 1}));
  auto s = CoefficientSeries::from_orbit(fib, 9);
  auto ref = oracle::fibonacci(9);
  for (std::size_t n = 0; n <= 9; ++n) CHECK(s[n] == ref[n]);
  CHECK(fib.map.coordinates()[0] == parse_polynomial("T2", T2));
  CHECK(fib.map.coordinates()[1] == parse_polynomial("T1 + T2", T2));

  std::vector<std::string> T1{"T1"};
  auto sq = recurrence_to_spec(parse_polynomial("T1^2", T1), ints({2}));
  auto q = CoefficientSeries::from_orbit(sq, 3);
  CHECK(q.coefficients() == std::vector<BigRational>{2, 4, 16, 256});

  std::vector<std::string> T3{"T1", "T2", "T3"};
  auto per = recurrence_to_spec(parse_polynomial("T1", T3), ints({1, 2, 3}));
  auto c = classify(per, ClassifyBudgets{});
  CHECK(c.verdict == ClassVerdict::EventuallyPolynomial);
  REQUIRE(c.decomposition);
  CHECK(c.decomposition->modulus == 3);
  CHECK(c.decomposition->polynomials == std::vector<UPoly>{UPoly({1}), UPoly({2}), UPoly({3})});

  try {
    recurrence_to_spec(parse_polynomial("T1", T3), ints({1, 2}));
    FAIL("expected ArityMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ArityMismatch);
  }
}

TEST_CASE("doubly exponential recurrence witness") {
  // A(n+1) = A(n)^2 + 1 from 0: ln ln A(n) / ln n >= 1 somewhere on [5, 20].
  auto a = oracle::square_plus_one(20);
  double best = 0;
  for (std::size_t n = 5; n <= 20; ++n) {
    best = std::max(best, std::log(log_abs(a[n])) / std::log(static_cast<double>(n)));
  }
  CHECK(best >= 1.0);
  std::vector<std::string> T1{"T1"};
  auto src = recurrence_to_spec(parse_polynomial("T1^2 + 1", T1), ints({0}));
  auto series = CoefficientSeries::from_orbit(src, 20);
  auto g = growth_estimate(observable_heights(series), 5, 1);
  CHECK(g.sup_ratio == doctest::Approx(best));
}
