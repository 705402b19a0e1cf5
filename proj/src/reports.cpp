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

#include "arithdyn/reports.hpp"

#include <cstdio>
#include <ostream>

namespace arithdyn {

using nlohmann::json;

json rational_list_json(const std::vector<BigRational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_fraction_string(v));
  return arr;
}

json upoly_json(const UPoly& p) { return rational_list_json(p.coefficients()); }

json to_json(const GrowthEstimate& g) {
  return json{{"window", {g.n_min, g.n_max}},
              {"sup_ratio", g.sup_ratio},
              {"sup_index", g.sup_index},
              {"exp_slope", g.exp_slope},
              {"verdict_threshold", g.verdict_threshold},
              {"usable_indices", g.usable_indices},
              {"meets_threshold", g.sup_ratio >= g.verdict_threshold}};
}

json to_json(const RationalityVerdict& v) {
  if (const auto* r = std::get_if<RationalVerdict>(&v)) {
    return json{{"verdict", "Rational"},
                {"numerator", upoly_json(r->numerator)},
                {"denominator", upoly_json(r->denominator)},
                {"numerator_text", format_upoly(r->numerator, "t")},
                {"denominator_text", format_upoly(r->denominator, "t")},
                {"verified_order", r->verified_order},
                {"primes_checked", r->primes_checked},
                {"primes_skipped", r->primes_skipped}};
  }
  const auto& u = std::get<UndecidedVerdict>(v);
  return json{{"verdict", "Undecided"}, {"max_contact", u.max_contact}, {"reason", u.reason}};
}

json to_json(const CriterionReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"n", row.n},
                        {"lhs", row.lhs},
                        {"rhs", row.rhs},
                        {"lower_bound", row.lhs_is_lower_bound},
                        {"verdict", to_string(row.verdict)}});
  }
  json growth = json::array();
  for (const auto& g : r.growth_rows) {
    growth.push_back(json{{"n", g.n},
                       {"h_trunc", g.h_trunc},
                       {"threshold", g.threshold},
                       {"status", to_string(g.status)}});
  }
  return json{{"eta", to_fraction_string(r.eta)},
              {"prime_budget", r.prime_budget},
              {"skipped_primes", r.skipped_primes},
              {"rows", rows},
              {"eq9_rows", growth}};
}

json to_json(const ClassifyBudgets& b) {
  return json{{"steps", b.steps}, {"bit_budget", b.bit_budget}, {"d_max", b.d_max},
              {"g_max", b.g_max}, {"n0_max", b.n0_max},          {"n_min", b.n_min}};
}

json to_json(const Classification& c) {
  json out{{"verdict", to_string(c.verdict)},
           {"detection", to_string(c.detection)},
           {"dimension", c.dimension},
           {"coefficients_computed", c.coefficients_computed},
           {"budgets", to_json(c.budgets)}};
  if (c.decomposition) {
    const auto& d = *c.decomposition;
    json polys = json::array();
    json texts = json::array();
    for (const auto& p : d.polynomials) {
      polys.push_back(upoly_json(p));
      texts.push_back(format_upoly(p, "n"));
    }
    out["d"] = d.modulus;
    out["n0"] = d.threshold;
    out["max_degree"] = d.max_degree;
    out["verified_range"] = d.verified_range;
    out["polynomials"] = polys;
    out["polynomials_text"] = texts;
  } else {
    out["d"] = nullptr;
    out["n0"] = nullptr;
    out["polynomials"] = json::array();
  }
  out["window"] = c.growth ? to_json(*c.growth) : json(nullptr);
  if (c.overflow) {
    out["overflow"] = json{{"n", c.overflow->index}, {"bits", c.overflow->bits}};
  } else {
    out["overflow"] = nullptr;
  }
  return out;
}

json to_json(const RuzsaEstimate& e) {
  return json{{"archimedean_log_radius", e.archimedean_log_radius},
              {"finite_radius_lower_bound", e.finite_radius_lower_bound},
              {"liminf_window_estimate", e.liminf_window_estimate},
              {"total", e.total},
              {"window", {e.window_min, e.window_max}},
              {"approximate", true},
              {"caveats", e.caveats}};
}

void write_heights_csv(std::ostream& out, const CoefficientSeries& series) {
  out << "n,point_height_log,observable_height_log,point_height_bits,observable_height_bits\n";
  const auto& pts = series.points();
  char buf[64];
  for (std::size_t n = 0; n < series.size(); ++n) {
    HeightValue hp = n < pts.size() ? height_affine(pts[n]) : HeightValue{};
    HeightValue hc = height_rational(series[n]);
    out << n << ',';
    std::snprintf(buf, sizeof buf, "%.17g", hp.logarithmic);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", hc.logarithmic);
    out << buf << ',' << mpz_sizeinbase(hp.multiplicative.get_mpz_t(), 2) << ','
        << mpz_sizeinbase(hc.multiplicative.get_mpz_t(), 2) << '\n';
  }
}

}  // namespace arithdyn
