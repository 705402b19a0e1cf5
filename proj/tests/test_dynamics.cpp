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
#include <sstream>

#include "arithdyn/dynamics.hpp"
#include "oracles.hpp"

using namespace arithdyn;

namespace {

OrbitSource source(std::vector<std::string> map, std::string lambda, std::vector<BigRational> start) {
  std::vector<std::string> vars = map.size() == 1 ? std::vector<std::string>{"x"}
                                                  : std::vector<std::string>{"x", "y", "z"};
  vars.resize(map.size());
  std::vector<Polynomial> coords;
  for (const auto& m : map) coords.push_back(parse_polynomial(m, vars));
  return OrbitSource{PolySelfMap(coords), Observable(parse_polynomial(lambda, vars)), std::move(start)};
}

}  // namespace

TEST_CASE("iterate examples") {
  auto tr = source({"x + 1"}, "x", {0});
  Orbit o = iterate(tr.map, tr.start, 5);
  REQUIRE(o.records.size() == 6);
  CHECK_FALSE(o.overflow);
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(o.records[n].index == n);
    CHECK(o.records[n].point[0] == static_cast<long>(n));
    CHECK(o.records[n].point_height.multiplicative == std::max<long>(1, n));
  }
  CHECK(o.records[2].point_height.logarithmic == doctest::Approx(std::log(2.0)));

  auto sq = source({"x^2 + 1"}, "x", {0});
  Orbit q = iterate(sq.map, sq.start, 6, kDefaultBitBudget, &sq.observable);
  auto ref = oracle::square_plus_one(6);
  REQUIRE(q.records.size() == 7);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(q.records[n].observable_value == ref[n]);
  CHECK(q.records[6].observable_value == 458330);

  auto id = source({"x"}, "x", {7});
  Orbit c = iterate(id.map, id.start, 3);
  for (const auto& r : c.records) CHECK(r.point[0] == 7);
}

TEST_CASE("overflow is reported with the first uncomputed index") {
  auto sq = source({"x^2 + 1"}, "x", {0});
  Orbit o = iterate(sq.map, sq.start, 40, 4096);
  REQUIRE(o.overflow);
  CHECK(o.overflow->bits > 4096);
  CHECK(o.overflow->index == o.records.size());
  for (const auto& r : o.records) CHECK(bit_size(r.point[0]) <= 4096);
}

TEST_CASE("prefix property and determinism") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::string a = std::to_string(c(rng)) + "*x*y + " + std::to_string(c(rng)) + "*y + 1";
    std::string b = std::to_string(c(rng)) + "*x^2 + x - " + std::to_string(c(rng));
    auto s = source({a, b}, "x", {BigRational(1, 2), 1});
    Orbit n8 = iterate(s.map, s.start, 8, 20000);
    Orbit n9 = iterate(s.map, s.start, 9, 20000);
    Orbit again = iterate(s.map, s.start, 8, 20000);
    if (n8.overflow || n9.overflow) continue;
    REQUIRE(n9.records.size() == n8.records.size() + 1);
    for (std::size_t i = 0; i < n8.records.size(); ++i) {
      CHECK(n8.records[i].point == n9.records[i].point);
      CHECK(n8.records[i].point == again.records[i].point);
    }
  }
}

TEST_CASE("coefficient series") {
  auto fib = source({"y", "x + y"}, "x", {0, 1});
  auto s = CoefficientSeries::from_orbit(fib, 30);
  auto ref = oracle::fibonacci(30);
  REQUIRE(s.size() == 31);
  for (std::size_t n = 0; n <= 30; ++n) CHECK(s[n] == ref[n]);
  CHECK(s.bad_primes().empty());

  auto sq = CoefficientSeries::from_orbit(source({"x^2 + 1"}, "x", {0}), 4);
  CHECK(sq.coefficients() == std::vector<BigRational>{0, 1, 2, 5, 26});
  CHECK(sq.extend_to(6));
  CHECK(sq[6] == 458330);

  auto one = CoefficientSeries::from_orbit(source({"1/3*x^2 + 1"}, "1", {BigRational(1, 5)}), 5);
  for (const auto& c : one.coefficients()) CHECK(c == 1);
}

TEST_CASE("bad primes") {
  CHECK(bad_primes(source({"x + y", "x*y"}, "x", {1, 2})).empty());
  CHECK(bad_primes(source({"1/2*x + 1"}, "x", {1})) == std::vector<BigInt>{2});
  CHECK(bad_primes(source({"3/10*x"}, "x", {BigRational(1, 7)})) == std::vector<BigInt>{2, 5, 7});
  CHECK(bad_primes(source({"x"}, "1/9*x", {1})) == std::vector<BigInt>{3});
}

TEST_CASE("S-integrality of coefficients") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> c(-4, 4), d(1, 6);
  for (int trial = 0; trial < 20; ++trial) {
    std::string m = std::to_string(c(rng)) + "/" + std::to_string(d(rng)) + "*x^2 + " +
                    std::to_string(c(rng)) + "/" + std::to_string(d(rng));
    BigRational p0(c(rng), d(rng));
    p0.canonicalize();
    auto s = CoefficientSeries::from_orbit(source({m}, "x", {p0}), 7, 200000);
    std::set<BigInt> bad(s.bad_primes().begin(), s.bad_primes().end());
    for (const auto& v : s.coefficients()) {
      if (bit_size(v) > 60) continue;  // trial factoring stays cheap
      for (const auto& [p, e] : oracle::trial_factor(v.get_den())) CHECK(bad.count(p) == 1);
    }
  }
}

TEST_CASE("growth estimate examples") {
  auto tr = CoefficientSeries::from_orbit(source({"x + 1"}, "x", {0}), 50);
  auto h = observable_heights(tr);
  auto g = growth_estimate(std::span(h).first(51), 3, 1);
  CHECK(g.sup_ratio < 0.6);
  // Oracle: max of ln ln n / ln n over 3..50.
  double best = 0;
  for (int n = 3; n <= 50; ++n) best = std::max(best, std::log(std::log(n)) / std::log(n));
  CHECK(g.sup_ratio == doctest::Approx(best).epsilon(1e-12));
  CHECK(g.verdict_threshold == 1.0);

  auto sq = CoefficientSeries::from_orbit(source({"x^2 + 1"}, "x", {0}), 20);
  auto hs = observable_heights(sq);
  auto gs = growth_estimate(hs, 10, 1);
  CHECK(gs.sup_ratio >= 3.0);
  CHECK(gs.n_min == 10);
  CHECK(gs.n_max == 20);
  CHECK(gs.exp_slope == doctest::Approx(std::log(2.0)).epsilon(1e-3));

  auto con = CoefficientSeries::from_orbit(source({"x"}, "x", {1}), 20);
  auto hc = observable_heights(con);
  try {
    growth_estimate(hc, 2, 1);
    FAIL("expected InsufficientData");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InsufficientData);
  }
}

TEST_CASE("trivial bound") {
  auto tr = source({"x + 1"}, "x", {0});
  auto o = iterate(tr.map, tr.start, 30);
  for (const auto& row : trivial_bound_check(o.records, 1)) CHECK(row.holds);

  auto sq = source({"x^2 + 1"}, "x", {0});
  auto q = iterate(sq.map, sq.start, 10);
  auto rows = trivial_bound_check(q.records, 1);
  CHECK(rows.size() == 11);
  for (const auto& row : rows) CHECK(row.holds);

  auto id = source({"x"}, "x", {3});
  auto c = iterate(id.map, id.start, 3);
  try {
    trivial_bound_check(c.records, 1);
    FAIL("expected RepeatedPoint");
  } catch (const RepeatedPointError& e) {
    CHECK(e.code() == Errc::RepeatedPoint);
    CHECK(e.first() == 0);
    CHECK(e.second() == 1);
  }

  auto half = source({"1/2*x"}, "x", {1});
  auto h = iterate(half.map, half.start, 3);
  try {
    trivial_bound_check(h.records, 1);
    FAIL("expected NonIntegerOrbit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonIntegerOrbit);
  }
}

TEST_CASE("orbit cache round trip") {
  auto src = source({"y", "1/3*x*y + 1"}, "x + y", {BigRational(-1, 2), 2});
  auto s = CoefficientSeries::from_orbit(src, 12);
  std::stringstream buf;
  write_orbit_cache(buf, s);
  auto [points, values] = read_orbit_cache(buf, 2);
  CHECK(points == s.points());
  CHECK(values == s.coefficients());
  auto warm = series_from_cache(src, points, values, kDefaultBitBudget);
  REQUIRE(warm);
  CHECK(warm->extend_to(15));
  auto cold = CoefficientSeries::from_orbit(src, 15);
  CHECK(warm->coefficients() == cold.coefficients());

  // A cache for another start point is rejected.
  auto other = src;
  other.start[0] = 5;
  CHECK_FALSE(series_from_cache(other, points, values, kDefaultBitBudget));
}
