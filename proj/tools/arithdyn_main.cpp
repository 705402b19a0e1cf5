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

// arithdyn: orbit heights, mod-p degree profiles, rationality checks and
// the polynomial-progression / growth classification for polynomial
// self-maps of affine space over Q.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arithdyn/classifier.hpp"
#include "arithdyn/dynamics.hpp"
#include "arithdyn/modp.hpp"
#include "arithdyn/problem_spec.hpp"
#include "arithdyn/rationality.hpp"
#include "arithdyn/reports.hpp"

namespace fs = std::filesystem;
using arithdyn::BigRational;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitSpec = 2;
constexpr int kExitOverflow = 3;

struct Options {
  std::string command;
  std::string spec_path;
  std::string out_dir = ".";
  bool deterministic = false;
  unsigned threads = 0;
  std::string cache_path;

  std::optional<std::size_t> steps, bit_budget, d_max, g_max, n0_max, n_min;
  std::optional<std::string> eta;
  std::optional<std::uint64_t> pmax;
  std::vector<std::size_t> n_values;

  std::size_t L = 6;
  std::size_t n_verify = 40;
  std::vector<std::uint64_t> sample_primes{101, 103, 107};
  std::optional<std::size_t> window_min, window_max;

  std::string recurrence_poly;
  std::vector<std::string> seeds;
  std::string name;
};

// Overflow with partial output: the command already wrote what it could.
struct PartialOverflow {
  arithdyn::OrbitOverflow info;
};

std::string timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

class Runner {
 public:
  Runner(Options opts, arithdyn::ProblemSpec spec) : opts_(std::move(opts)), spec_(std::move(spec)) {
    if (opts_.steps) spec_.steps = *opts_.steps;
    if (opts_.bit_budget) spec_.bit_budget = *opts_.bit_budget;
    if (opts_.d_max) spec_.d_max = *opts_.d_max;
    if (opts_.g_max) spec_.g_max = *opts_.g_max;
    if (opts_.n0_max) spec_.n0_max = *opts_.n0_max;
    if (opts_.n_min) spec_.n_min = *opts_.n_min;
    if (opts_.pmax) spec_.pmax = *opts_.pmax;
    if (opts_.eta) {
      spec_.eta = arithdyn::parse_rational(*opts_.eta);
      if (spec_.eta <= 0) throw arithdyn::Error(arithdyn::Errc::SpecError, "--eta must be positive");
    }
    if (!opts_.name.empty()) spec_.name = opts_.name;
    fs::create_directories(opts_.out_dir);
  }

  int run() {
    const std::string& c = opts_.command;
    if (c == "orbit") return orbit();
    if (c == "heights") return heights();
    if (c == "exponent") return exponent();
    if (c == "modp") return modp();
    if (c == "rationality") return rationality();
    if (c == "criterion") return criterion();
    if (c == "classify" || c == "recurrence") return classify();
    if (c == "ruzsa") return ruzsa();
    std::cerr << "unknown command " << c << "\n";
    return kExitFailure;
  }

 private:
  fs::path output(const std::string& suffix) const { return fs::path(opts_.out_dir) / (spec_.name + suffix); }

  json envelope(json body) const {
    json out{{"tool", "arithdyn"},
             {"command", opts_.command},
             {"name", spec_.name},
             {"dimension", spec_.dimension},
             {"map", spec_.map_text},
             {"lambda", spec_.lambda_text},
             {"point", spec_.point_text}};
    if (!opts_.deterministic) out["generated_at"] = timestamp();
    out["result"] = std::move(body);
    return out;
  }

  void write_json(const std::string& suffix, const json& body) const {
    fs::path path = output(suffix);
    std::ofstream f(path, std::ios::binary);
    f << envelope(body).dump(2) << '\n';
    std::cout << "wrote " << path.string() << '\n';
  }

  // Series with coefficients 0..last, read from the cache when it matches.
  arithdyn::CoefficientSeries series(std::size_t last) const {
    const auto& source = *spec_.source;
    if (!opts_.cache_path.empty() && fs::exists(opts_.cache_path)) {
      std::ifstream in(opts_.cache_path);
      auto [points, values] = arithdyn::read_orbit_cache(in, spec_.dimension);
      if (auto s = arithdyn::series_from_cache(source, std::move(points), std::move(values), spec_.bit_budget)) {
        s->extend_to(last);
        return std::move(*s);
      }
      std::cerr << "warning: cache " << opts_.cache_path << " does not match this spec; recomputing\n";
    }
    return arithdyn::CoefficientSeries::from_orbit(source, last, spec_.bit_budget);
  }

  int finish(const arithdyn::CoefficientSeries& s) const {
    if (s.overflow()) {
      std::cerr << "orbit overflow at n=" << s.overflow()->index << " (" << s.overflow()->bits
                << " bits > budget " << spec_.bit_budget << "); partial output written\n";
      return kExitOverflow;
    }
    return kExitOk;
  }

  int orbit() {
    auto s = series(spec_.steps);
    fs::path path = opts_.cache_path.empty() ? output(".orbit.tsv") : fs::path(opts_.cache_path);
    std::ofstream f(path, std::ios::binary);
    arithdyn::write_orbit_cache(f, s);
    std::cout << "wrote " << path.string() << " (" << s.size() << " records)\n";
    return finish(s);
  }

  int heights() {
    auto s = series(spec_.steps);
    fs::path path = output(".heights.csv");
    std::ofstream f(path, std::ios::binary);
    arithdyn::write_heights_csv(f, s);
    std::cout << "wrote " << path.string() << '\n';
    return finish(s);
  }

  int exponent() {
    auto s = series(spec_.steps);
    json body;
    try {
      auto g = arithdyn::growth_estimate(arithdyn::observable_heights(s), spec_.n_min, spec_.dimension);
      body = arithdyn::to_json(g);
    } catch (const arithdyn::Error& e) {
      if (e.code() != arithdyn::Errc::InsufficientData) throw;
      body = json{{"error", "InsufficientData"}, {"message", e.what()}};
    }
    body["coefficients_computed"] = s.size();
    body["overflow"] = s.overflow() ? json{{"n", s.overflow()->index}, {"bits", s.overflow()->bits}} : json(nullptr);
    write_json(".exponent.json", body);
    return finish(s);
  }

  int modp() {
    auto sweep = arithdyn::degree_profile_sweep(*spec_.source, spec_.pmax, opts_.threads);
    fs::path path = output(".modp.csv");
    std::ofstream f(path, std::ios::binary);
    arithdyn::write_profile_csv(f, sweep);
    std::cout << "wrote " << path.string() << " (" << sweep.profiles.size() << " good primes";
    if (!sweep.skipped.empty()) {
      std::cout << "; skipped bad primes";
      for (auto p : sweep.skipped) std::cout << ' ' << p;
    }
    std::cout << ")\n";
    return kExitOk;
  }

  int rationality() {
    auto s = series(spec_.steps);
    json body;
    int code = kExitOk;
    try {
      body = arithdyn::to_json(arithdyn::check_rationality(s, opts_.L, opts_.n_verify, opts_.sample_primes, spec_.eta));
    } catch (const arithdyn::OrbitOverflowError& e) {
      body = json{{"verdict", "Undecided"}, {"reason", e.what()}};
      code = kExitOverflow;
    }
    body["L"] = opts_.L;
    body["n_verify"] = opts_.n_verify;
    body["eta"] = arithdyn::to_fraction_string(spec_.eta);
    write_json(".rationality.json", body);
    return code;
  }

  int criterion() {
    std::vector<std::size_t> ns = opts_.n_values.empty() ? std::vector<std::size_t>{10, 20, 30} : opts_.n_values;
    std::size_t max_n = 0;
    for (auto n : ns) max_n = std::max(max_n, n);
    auto s = series(max_n);
    std::vector<std::size_t> reachable;
    for (auto n : ns) {
      if (n < s.size()) reachable.push_back(n);
    }
    auto sweep = arithdyn::degree_profile_sweep(*spec_.source, spec_.pmax, opts_.threads);
    auto report = arithdyn::criterion_check(s, spec_.eta, reachable, spec_.pmax, sweep);
    json body = arithdyn::to_json(report);
    body["overflow"] = s.overflow() ? json{{"n", s.overflow()->index}, {"bits", s.overflow()->bits}} : json(nullptr);
    write_json(".criterion.json", body);
    return reachable.size() == ns.size() ? kExitOk : finish(s);
  }

  int classify() {
    auto budgets = spec_.budgets();
    budgets.threads = opts_.threads == 0 ? 1 : opts_.threads;
    std::size_t need = arithdyn::progression_data_requirement(budgets.d_max, budgets.g_max, budgets.n0_max);
    auto s = series(std::max(budgets.steps, need - 1));
    auto c = arithdyn::classify(s, budgets);
    if (opts_.command == "recurrence") {
      fs::path path = output(".spec");
      std::ofstream f(path, std::ios::binary);
      f << "name = " << spec_.name << '\n' << "r = " << spec_.dimension << '\n' << "vars =";
      for (std::size_t i = 0; i < spec_.variables.size(); ++i) f << (i ? ", " : " ") << spec_.variables[i];
      f << '\n';
      for (std::size_t i = 0; i < spec_.map_text.size(); ++i) f << "map." << (i + 1) << " = " << spec_.map_text[i] << '\n';
      f << "lambda = " << spec_.lambda_text << '\n' << "point =";
      for (std::size_t i = 0; i < spec_.point_text.size(); ++i) f << (i ? ", " : " ") << spec_.point_text[i];
      f << '\n';
      std::cout << "wrote " << path.string() << '\n';
    }
    write_json(".classify.json", arithdyn::to_json(c));
    std::cout << "verdict: " << arithdyn::to_string(c.verdict) << '\n';
    return kExitOk;
  }

  int ruzsa() {
    std::size_t lo = opts_.window_min.value_or(spec_.n_min);
    std::size_t hi = opts_.window_max.value_or(spec_.steps);
    auto s = series(hi);
    json body;
    int code = kExitOk;
    if (s.size() <= hi) {
      hi = s.size() == 0 ? 0 : s.size() - 1;
      code = kExitOverflow;
    }
    body = arithdyn::to_json(arithdyn::ruzsa_functional(s, lo, hi, spec_.pmax, opts_.threads));
    write_json(".ruzsa.json", body);
    return code;
  }

  Options opts_;
  arithdyn::ProblemSpec spec_;
};

arithdyn::ProblemSpec recurrence_spec(const Options& opts) {
  if (!opts.spec_path.empty()) {
    auto spec = arithdyn::load_spec(opts.spec_path);
    if (!spec.recurrence_text && opts.recurrence_poly.empty()) {
      throw arithdyn::Error(arithdyn::Errc::SpecError, opts.spec_path + ": no recurrence key and no --poly given");
    }
    if (opts.recurrence_poly.empty()) return spec;
  }
  if (opts.recurrence_poly.empty() || opts.seeds.empty()) {
    throw arithdyn::Error(arithdyn::Errc::SpecError, "recurrence needs --poly and --seeds (or a spec file)");
  }
  std::ostringstream text;
  text << "name = " << (opts.name.empty() ? "recurrence" : opts.name) << '\n';
  text << "recurrence = " << opts.recurrence_poly << '\n' << "seeds =";
  for (const auto& s : opts.seeds) text << ' ' << s;
  text << '\n';
  return arithdyn::parse_spec(text.str(), "<command line>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithdyn: heights, mod-p degrees and growth classification for polynomial orbits over Q"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub, bool spec_required) {
    auto* spec = sub->add_option("spec", opts.spec_path, "problem file (key = value lines)");
    if (spec_required) spec->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opts.out_dir, "output directory")->capture_default_str();
    sub->add_flag("--deterministic", opts.deterministic, "omit timestamps so reports are byte-identical");
    sub->add_option("--threads", opts.threads, "worker threads for prime sweeps (0 = hardware)");
    sub->add_option("--cache", opts.cache_path, "orbit cache file (written by 'orbit', read by others)");
    sub->add_option("--steps", opts.steps, "orbit steps");
    sub->add_option("--bit-budget", opts.bit_budget, "max bits per numerator/denominator");
    sub->add_option("--eta", opts.eta, "positive rational eta");
    sub->add_option("--pmax", opts.pmax, "prime budget");
    sub->add_option("--d-max", opts.d_max, "largest progression modulus");
    sub->add_option("--g-max", opts.g_max, "largest polynomial degree per class");
    sub->add_option("--n0-max", opts.n0_max, "largest threshold searched");
    sub->add_option("--n-min", opts.n_min, "first index of the growth window");
    sub->add_option("--name", opts.name, "override the report name");
  };

  struct Cmd {
    const char* name;
    const char* help;
  };
  const Cmd commands[] = {
      {"orbit", "iterate and write the orbit cache"},
      {"heights", "height profile CSV"},
      {"exponent", "growth-exponent window estimate JSON"},
      {"modp", "mod-p rational degree sweep CSV"},
      {"rationality", "rationality verdict JSON"},
      {"criterion", "prime-sum criterion report JSON"},
      {"classify", "progression / growth classification JSON"},
      {"ruzsa", "exploratory radius + prime density functional JSON"},
  };
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, true);
    sub->callback([&opts, name = c.name] { opts.command = name; });
    if (std::string(c.name) == "criterion") {
      sub->add_option("--n", opts.n_values, "comma-separated truncation orders")->delimiter(',');
    }
    if (std::string(c.name) == "rationality") {
      sub->add_option("--L", opts.L, "approximant parameter L (order (2+eta)L)")->capture_default_str();
      sub->add_option("--n-verify", opts.n_verify, "verify Q F - P through this order")->capture_default_str();
      sub->add_option("--primes", opts.sample_primes, "primes for the mod-p cross-check")->delimiter(',');
    }
    if (std::string(c.name) == "ruzsa") {
      sub->add_option("--window-min", opts.window_min, "first index of the window");
      sub->add_option("--window-max", opts.window_max, "last index of the window");
    }
  }
  auto* rec = app.add_subcommand(
      "recurrence",
      "build the shift map of A(n+r) = p(A(n), ..., A(n+r-1)) and classify it. Variable Ti of p is "
      "A(n+i-1); the observable is the first coordinate, so c_n = A(n) (projecting on the last "
      "coordinate would give A(n+r-1), a fixed index shift)");
  add_common(rec, false);
  rec->add_option("--poly", opts.recurrence_poly, "p in T1..Tr");
  rec->add_option("--seeds", opts.seeds, "A(0),...,A(r-1)")->delimiter(',');
  rec->callback([&opts] { opts.command = "recurrence"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitSpec;
  }

  arithdyn::ProblemSpec spec;
  try {
    spec = opts.command == "recurrence" ? recurrence_spec(opts) : arithdyn::load_spec(opts.spec_path);
    for (const auto& w : spec.warnings) std::cerr << "warning: " << w << '\n';
  } catch (const arithdyn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSpec;
  }

  try {
    Runner runner(opts, std::move(spec));
    return runner.run();
  } catch (const arithdyn::OrbitOverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const arithdyn::Error& e) {
    std::cerr << "error [" << arithdyn::errc_name(e.code()) << "]: " << e.what() << '\n';
    return e.code() == arithdyn::Errc::SpecError ? kExitSpec : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
