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

#include "arithdyn/heights.hpp"
#include "oracles.hpp"

using namespace arithdyn;

namespace {

std::vector<BigRational> Q(std::initializer_list<const char*> xs) {
  std::vector<BigRational> v;
  for (const char* s : xs) v.push_back(parse_rational(s));
  return v;
}

std::vector<BigInt> Z(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("-6/4") == BigRational(-3, 2));
  CHECK(parse_rational(" 17 ") == 17);
  CHECK(to_fraction_string(BigRational(5)) == "5/1");
  CHECK(to_fraction_string(BigRational(-3, 2)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("normalize_projective") {
  CHECK(normalize_projective(Q({"1", "1/2"})) == Z({2, 1}));
  CHECK(normalize_projective(Q({"0", "-3", "6"})) == Z({0, 1, -2}));
  CHECK(normalize_projective(Q({"2/3", "4/9"})) == Z({3, 2}));
  CHECK(oracle::brute_force_normalize(Q({"2/3", "4/9"})) == Z({3, 2}));
  try {
    normalize_projective(Q({"0", "0"}));
    FAIL("expected AllZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AllZero);
  }
}

TEST_CASE("normalize_projective agrees with brute-force scaling") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12), len(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<BigRational> x(len(rng));
    for (auto& c : x) {
      c = BigRational(num(rng), den(rng));
      c.canonicalize();
    }
    if (std::all_of(x.begin(), x.end(), [](const BigRational& c) { return c == 0; })) continue;
    CHECK(normalize_projective(x) == oracle::brute_force_normalize(x));
  }
}

TEST_CASE("height examples") {
  CHECK(height_projective(Q({"1", "1"})).multiplicative == 1);
  CHECK(height_projective(Q({"1", "1"})).logarithmic == 0.0);
  auto h = height_projective(Q({"1", "2", "4"}));
  CHECK(h.multiplicative == 4);
  CHECK(h.logarithmic == doctest::Approx(std::log(4.0)));
  CHECK(oracle::place_sum_height(Q({"1", "2", "4"})) == 4);
  CHECK(height_projective(Q({"1", "3/2"})).multiplicative == 3);
  CHECK(oracle::place_sum_height(Q({"1", "3/2"})) == 3);

  CHECK(height_affine(Q({"0", "0"})).multiplicative == 1);
  CHECK(height_affine(Q({"22/7"})).multiplicative == 22);
  CHECK(height_affine(Q({"2", "8"})).multiplicative == 8);

  CHECK(height_rational(BigRational(-22, 7)).multiplicative == 22);
  CHECK(height_rational(BigRational(3, 5)).multiplicative == 5);
}

TEST_CASE("polynomial heights") {
  std::vector<std::string> vars{"t"};
  CHECK(height_polynomial(parse_polynomial("t^3", vars)).multiplicative == 1);
  CHECK(height_polynomial(parse_polynomial("2*t + 4", vars)).multiplicative == 2);
  CHECK(height_polynomial(UPoly({0, 1, BigRational(3, 2)})).multiplicative == 3);
  CHECK(oracle::place_sum_height(Q({"0", "1", "3/2"})) == 3);
  try {
    height_polynomial(Polynomial(1));
    FAIL("expected ZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroPolynomial);
  }
}

TEST_CASE("height agrees with the place-sum oracle") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-200, 200), den(1, 60), len(1, 4);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<BigRational> x(len(rng));
    for (auto& c : x) {
      c = BigRational(num(rng), den(rng));
      c.canonicalize();
    }
    if (std::all_of(x.begin(), x.end(), [](const BigRational& c) { return c == 0; })) continue;
    HeightValue h = height_projective(x);
    CHECK(BigRational(h.multiplicative) == oracle::place_sum_height(x));
    CHECK(h.multiplicative >= 1);
  }
}

TEST_CASE("affine height of integer vectors") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> v(-1000000, 1000000);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigRational> x(3);
    BigInt m = 1;
    for (auto& c : x) {
      c = v(rng);
      if (abs(c.get_num()) > m) m = abs(c.get_num());
    }
    CHECK(height_affine(x).multiplicative == m);
  }
}

TEST_CASE("place decomposition examples") {
  auto d = place_decomposition(BigRational(22, 7));
  CHECK(d.finite_parts.size() == 3);
  CHECK(d.finite_parts.at(2) == 1);
  CHECK(d.finite_parts.at(11) == 1);
  CHECK(d.finite_parts.at(7) == -1);
  CHECK(d.archimedean_log - std::log(2.0) - std::log(11.0) + std::log(7.0) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(product_formula_holds(BigRational(22, 7), d));

  auto one = place_decomposition(BigRational(1));
  CHECK(one.finite_parts.empty());
  CHECK(one.archimedean_log == 0.0);

  auto m = place_decomposition(BigRational(-8, 3));
  CHECK(m.finite_parts.at(2) == 3);
  CHECK(m.finite_parts.at(3) == -1);
  CHECK(m.finite_parts.size() == 2);

  auto wrong = d;
  wrong.finite_parts[2] = 2;
  CHECK_FALSE(product_formula_holds(BigRational(22, 7), wrong));
  CHECK_THROWS_AS(place_decomposition(BigRational(0)), Error);
}

TEST_CASE("place decomposition valuations match the oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    BigRational c = oracle::random_rational(rng, 24);
    auto d = place_decomposition(c);
    for (const auto& [p, v] : d.finite_parts) CHECK(oracle::valuation(c, p) == v);
    for (const auto& [p, e] : oracle::trial_factor(c.get_num())) CHECK(d.finite_parts.count(p) == 1);
    for (const auto& [p, e] : oracle::trial_factor(c.get_den())) CHECK(d.finite_parts.count(p) == 1);
  }
}

TEST_CASE("sum bound examples") {
  // [1, 1]: bound ln 2 and h(2) = ln 2.
  auto a = Q({"1", "1"});
  CHECK(sum_height_bound_exact(a) == 2);
  CHECK(height_rational(BigRational(2)).multiplicative == 2);

  // [1/2, 1/2]: ln 2 from r plus ln 2 from the place 2; the sum is 1.
  auto b = Q({"1/2", "1/2"});
  CHECK(sum_height_bound_exact(b) == 4);
  CHECK(height_rational(BigRational(1)).multiplicative == 1);

  // [3, 5, 7]: ln 3 + ln 7 >= h(15).
  auto c = Q({"3", "5", "7"});
  CHECK(sum_height_bound_exact(c) == 21);
  CHECK(sum_height_bound(c) == doctest::Approx(std::log(21.0)));
  CHECK(BigRational(15) <= sum_height_bound_exact(c));
}

TEST_CASE("sum bound equals ln r plus the place-sum oracle") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30), len(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigRational> x(len(rng));
    for (auto& c : x) {
      c = BigRational(num(rng), den(rng));
      c.canonicalize();
    }
    // Sum over places of max_j log+|a_j|_v equals h of the point (1 : a_1 : ... : a_r).
    std::vector<BigRational> with_one{1};
    with_one.insert(with_one.end(), x.begin(), x.end());
    BigRational expected = BigRational(static_cast<long>(x.size())) * oracle::place_sum_height(with_one);
    CHECK(sum_height_bound_exact(x) == expected);
  }
}
