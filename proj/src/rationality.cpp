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

#include "arithdyn/rationality.hpp"

#include <algorithm>
#include <cmath>

namespace arithdyn {

UPoly pade_defect(const UPoly& numerator, const UPoly& denominator,
                  std::span<const BigRational> series) {
  const std::size_t n = series.size();
  std::vector<BigRational> out(n, BigRational(0));
  const auto& q = denominator.coefficients();
  for (std::size_t k = 0; k < n; ++k) {
    BigRational acc = -numerator[k];
    for (std::size_t j = 0; j < q.size() && j <= k; ++j) {
      if (q[j] != 0) acc += q[j] * series[k - j];
    }
    out[k] = std::move(acc);
  }
  return UPoly(std::move(out));
}

std::optional<std::size_t> contact_order(const UPoly& numerator, const UPoly& denominator,
                                         std::span<const BigRational> series) {
  const auto& q = denominator.coefficients();
  for (std::size_t k = 0; k < series.size(); ++k) {
    BigRational acc = -numerator[k];
    for (std::size_t j = 0; j < q.size() && j <= k; ++j) {
      if (q[j] != 0) acc += q[j] * series[k - j];
    }
    if (acc != 0) {
      if (k == 0) return std::nullopt;
      return k - 1;
    }
  }
  if (series.empty()) return std::nullopt;
  return series.size() - 1;
}

PadeApproximant pade_via_euclid(std::span<const BigRational> truncation, std::size_t num_max,
                                std::size_t den_max) {
  if (truncation.empty() || truncation.size() < num_max + den_max + 1) {
    throw Error(Errc::DegreeSplitInfeasible,
                "need at least num_max + den_max + 1 = " + std::to_string(num_max + den_max + 1) +
                    " terms, have " + std::to_string(truncation.size()));
  }
  // The [num_max/den_max] approximant only looks at the first
  // num_max + den_max + 1 terms; contact is then measured on all of them.
  const std::size_t order = num_max + den_max + 1;
  // Invariant: r_i = s_i t^order + v_i F; only (r_i, v_i) are tracked.
  UPoly r0 = UPoly::monomial(order);
  UPoly r1(std::vector<BigRational>(truncation.begin(), truncation.begin() + static_cast<long>(order)));
  UPoly v0;
  UPoly v1 = UPoly::monomial(0);
  while (!r1.is_zero() && r1.degree() > static_cast<long>(num_max)) {
    auto [quo, rem] = UPoly::divmod(r0, r1);
    UPoly v2 = v0 - quo * v1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  UPoly P = std::move(r1);
  UPoly Q = std::move(v1);
  UPoly g = UPoly::gcd(P, Q);
  if (!g.is_zero() && g.degree() > 0) {
    P = UPoly::divmod(P, g).first;
    Q = UPoly::divmod(Q, g).first;
  }
  if (P.is_zero()) Q = UPoly::monomial(0);
  if (Q[0] == 0) {
    throw Error(Errc::NoSolution, "no approximant with Q(0) != 0 for this degree split");
  }
  BigRational scale = BigRational(1) / Q[0];
  P *= scale;
  Q *= scale;
  auto contact = contact_order(P, Q, truncation);
  if (!contact || *contact + 1 < order) {
    throw Error(Errc::NoSolution, "no normalized approximant of this degree split reaches order " +
                                      std::to_string(order));
  }
  PadeApproximant out;
  out.contact_order = *contact;
  out.numerator = std::move(P);
  out.denominator = std::move(Q);
  return out;
}

double siegel_height_bound(std::size_t L, const BigRational& eta, double h_trunc) {
  if (eta <= 0) throw Error(Errc::InvalidArgument, "eta must be positive");
  BigRational eta_L = eta * BigRational(static_cast<unsigned long>(L));
  if (!is_integer(eta_L)) {
    throw Error(Errc::NonIntegralEtaL, "eta * L = " + to_display_string(eta_L) + " is not an integer");
  }
  double N = static_cast<double>(L) + eta_L.get_num().get_d();
  return 0.5 * std::log(N) + h_trunc / eta.get_d();
}

HeightValue truncation_height(CoefficientSeries& series, std::size_t n) {
  series.require(n);
  std::span<const BigRational> coeffs(series.coefficients().data(), n + 1);
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const BigRational& c) { return c == 0; })) {
    return HeightValue{};
  }
  return height_projective(coeffs);
}

namespace {

// Berlekamp-Massey fraction of the first `count` coefficients mod p.
std::optional<FpFraction> bm_fraction(const CoefficientSeries& series, std::size_t count,
                                      std::uint64_t p) {
  PrimeField F(p);
  std::vector<std::uint64_t> seq;
  seq.reserve(count);
  for (std::size_t i = 0; i < count && i < series.size(); ++i) {
    auto r = F.reduce(series[i]);
    if (!r) return std::nullopt;
    seq.push_back(*r);
  }
  try {
    auto bm = berlekamp_massey_degree(seq, p);
    return fp_reduce_fraction(F, bm.fraction.numerator, bm.fraction.denominator);
  } catch (const Error& e) {
    if (e.code() == Errc::InsufficientTerms) return std::nullopt;
    throw;
  }
}

}  // namespace

std::optional<FpFraction> series_fraction_mod_p(CoefficientSeries& series, std::uint64_t p) {
  if (series.is_bad_prime(p)) return std::nullopt;
  if (series.source()) return rational_degree_mod_p(*series.source(), p).fraction;
  return bm_fraction(series, series.size(), p);
}

RationalityVerdict check_rationality(CoefficientSeries& series, std::size_t L, std::size_t N_verify,
                                     std::span<const std::uint64_t> sample_primes,
                                     const BigRational& eta) {
  if (L == 0) throw Error(Errc::InvalidArgument, "L must be positive");
  if (eta <= 0) throw Error(Errc::InvalidArgument, "eta must be positive");
  BigRational eta_L = eta * BigRational(static_cast<unsigned long>(L));
  if (!is_integer(eta_L)) {
    throw Error(Errc::NonIntegralEtaL, "eta * L = " + to_display_string(eta_L) + " is not an integer");
  }
  const std::size_t order = 2 * L + eta_L.get_num().get_ui();  // (2 + eta) L
  series.require(std::max(order - 1, N_verify));

  const std::size_t den_max = (order - 1) / 2;
  const std::size_t num_max = order - 1 - den_max;
  std::span<const BigRational> all(series.coefficients().data(), std::max(order, N_verify + 1));
  PadeApproximant approx;
  try {
    approx = pade_via_euclid(all.first(order), num_max, den_max);
  } catch (const Error& e) {
    if (e.code() != Errc::NoSolution) throw;
    return UndecidedVerdict{0, e.what()};
  }

  auto contact = contact_order(approx.numerator, approx.denominator, all.first(N_verify + 1));
  if (!contact || *contact < N_verify) {
    return UndecidedVerdict{contact.value_or(0), "Q F - P does not vanish through t^" +
                                                     std::to_string(N_verify)};
  }

  RationalVerdict verdict;
  verdict.verified_order = *contact;
  for (std::uint64_t p : sample_primes) {
    auto phi = series_fraction_mod_p(series, p);
    PrimeField F(p);
    auto P = reduce_upoly(F, approx.numerator);
    auto Q = reduce_upoly(F, approx.denominator);
    if (!phi || !P || !Q) {
      verdict.primes_skipped.push_back(p);
      continue;
    }
    if (fp_reduce_fraction(F, *P, *Q) != *phi) {
      return UndecidedVerdict{*contact, "mod " + std::to_string(p) +
                                            " reduction of P/Q disagrees with Phi mod p"};
    }
    verdict.primes_checked.push_back(p);
  }
  verdict.numerator = std::move(approx.numerator);
  verdict.denominator = std::move(approx.denominator);
  return verdict;
}

std::string_view to_string(CriterionVerdict v) {
  return v == CriterionVerdict::ProvedHolds ? "ProvedHolds" : "FailsWithinBudget";
}

std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Holds: return "Holds";
    case BoundStatus::Fails: return "Fails";
    case BoundStatus::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

CriterionReport criterion_check(CoefficientSeries& series, const BigRational& eta,
                                std::span<const std::size_t> n_values, std::uint64_t p_max,
                                unsigned threads) {
  if (!series.source()) throw Error(Errc::InvalidArgument, "criterion_check needs an orbit series");
  DegreeSweep sweep = degree_profile_sweep(*series.source(), p_max, threads);
  return criterion_check(series, eta, n_values, p_max, sweep);
}

CriterionReport criterion_check(CoefficientSeries& series, const BigRational& eta,
                                std::span<const std::size_t> n_values, std::uint64_t p_max,
                                const DegreeSweep& sweep) {
  if (eta <= 0) throw Error(Errc::InvalidArgument, "eta must be positive");
  if (!series.source()) throw Error(Errc::InvalidArgument, "criterion_check needs an orbit series");
  CriterionReport report;
  report.eta = eta;
  report.prime_budget = p_max;
  report.skipped_primes = sweep.skipped;
  const double eta_d = eta.get_d();
  const std::size_t r = series.source()->dimension();
  const BigRational two_plus_eta = BigRational(2) + eta;

  for (std::size_t n : n_values) {
    CriterionRow row;
    row.n = n;
    for (const auto& prof : sweep.profiles) {
      if (prof.p > p_max) break;
      // h_p < n / (2 + eta), exactly.
      if (BigRational(static_cast<unsigned long>(prof.h_p)) * two_plus_eta <
          BigRational(static_cast<unsigned long>(n))) {
        row.lhs += std::log(static_cast<double>(prof.p));
      }
    }
    HeightValue h = truncation_height(series, n);
    row.rhs = 1.5 * std::log(static_cast<double>(std::max<std::size_t>(n, 1))) +
              (1.0 + 1.0 / eta_d) * h.logarithmic;
    row.lhs_is_lower_bound = true;
    row.verdict = row.lhs > row.rhs ? CriterionVerdict::ProvedHolds : CriterionVerdict::FailsWithinBudget;
    report.rows.push_back(row);

    GrowthLowerBoundRow g;
    g.n = n;
    g.h_trunc = h.logarithmic;
    g.threshold = std::pow(static_cast<double>(n) / 6.0, 1.0 / static_cast<double>(r)) / 3.0;
    auto [lo, hi] = log_bounds(h.multiplicative);
    const double slack = 1e-12 * std::max(1.0, g.threshold);
    if (lo >= g.threshold + slack) {
      g.status = BoundStatus::Holds;
    } else if (hi < g.threshold - slack) {
      g.status = BoundStatus::Fails;
    } else {
      g.status = BoundStatus::Undetermined;
    }
    report.growth_rows.push_back(g);
  }
  return report;
}

RuzsaEstimate ruzsa_functional(CoefficientSeries& series, std::size_t window_min,
                               std::size_t window_max, std::uint64_t p_max, unsigned threads) {
  if (window_min < 1) window_min = 1;
  if (window_max < window_min) throw Error(Errc::InvalidArgument, "empty window");
  if (!series.source()) throw Error(Errc::InvalidArgument, "ruzsa_functional needs an orbit series");
  series.require(window_max);

  RuzsaEstimate est;
  est.window_min = window_min;
  est.window_max = window_max;
  bool any = false;
  double best = 0.0;
  for (std::size_t n = window_min; n <= window_max; ++n) {
    const BigRational& c = series[n];
    if (c == 0) continue;
    double v = (log_abs(c.get_num()) - log_abs(c.get_den())) / static_cast<double>(n);
    if (!any || v > best) best = v;
    any = true;
  }
  if (!any) throw Error(Errc::InsufficientData, "no nonzero coefficients in the window");
  est.archimedean_log_radius = -best;
  est.finite_radius_lower_bound = 0.0;

  DegreeSweep sweep = degree_profile_sweep(*series.source(), p_max, threads);
  double liminf = 0.0;
  bool first = true;
  for (std::size_t n = window_min; n <= window_max; ++n) {
    double sum = 0.0;
    for (const auto& prof : sweep.profiles) {
      if (prof.h_p < n) sum += std::log(static_cast<double>(prof.p));
    }
    double v = sum / static_cast<double>(n);
    if (first || v < liminf) liminf = v;
    first = false;
  }
  est.liminf_window_estimate = liminf;
  est.total = est.archimedean_log_radius + est.finite_radius_lower_bound + est.liminf_window_estimate;
  est.caveats = {
      "archimedean radius estimated as -max ln|c_n|/n over the window",
      "finite places contribute the certified lower bound 0; radii at good primes may exceed 1",
      "liminf replaced by a window minimum with primes truncated at p_max",
      "exploratory: not a certificate of rationality or irrationality",
  };
  return est;
}

}  // namespace arithdyn
