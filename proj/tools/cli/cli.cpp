// Copyright 2026 The qmac Authors
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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qmac/cmac.hpp"
#include "qmac/infoq.hpp"
#include "qmac/random.hpp"
#include "qmac/regions.hpp"

namespace qmac::cli {
namespace {

using nlohmann::json;

const std::vector<std::string> kSuites{"entropy-max",    "min-output",  "classical-additivity",
                                       "gamma-bound",    "dense-coding", "chi-consistency"};
const std::set<std::string> kStochasticSuites{"entropy-max", "min-output", "classical-additivity",
                                              "chi-consistency"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double p = 0.5;
  double p_min = 0.0;
  double p_max = 1.0;
  std::size_t steps = 11;
  std::size_t trials = 0;
  std::size_t restarts = 200;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "csv";
  std::vector<std::string> suites;
};

struct Artifact {
  std::string text;
  int exit_code = kExitOk;
};

std::vector<double> grid(const RunConfig& cfg) {
  std::vector<double> ps(cfg.steps);
  for (std::size_t k = 0; k < cfg.steps; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(cfg.steps - 1);
    ps[k] = k + 1 == cfg.steps ? cfg.p_max : cfg.p_min + t * (cfg.p_max - cfg.p_min);
  }
  return ps;
}

void require_grid(const RunConfig& cfg) {
  if (cfg.steps < 2) throw UsageError("--steps must be at least 2");
  if (cfg.p_min > cfg.p_max) throw UsageError("--p-min must not exceed --p-max");
}

void require_json(const RunConfig& cfg, const char* command) {
  if (cfg.format != "json") throw UsageError(std::string(command) + " only supports --format json");
}

std::uint64_t require_seed(const RunConfig& cfg, const std::string& what) {
  if (!cfg.seed) throw UsageError(what + " is stochastic and needs --seed");
  return *cfg.seed;
}

double rounded(double x) { return round_significant(x); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  std::string text;
  for (std::size_t k = 0; k < header.size(); ++k) text += (k ? "," : "") + header[k];
  text += '\n';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) text += (k ? "," : "") + format_number(row[k]);
    text += '\n';
  }
  return text;
}

json rows_json(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r = json::object();
    for (std::size_t k = 0; k < header.size(); ++k) r[header[k]] = rounded(row[k]);
    out.push_back(std::move(r));
  }
  return out;
}

std::string table(const RunConfig& cfg, const std::vector<std::string>& header,
                  const std::vector<std::vector<double>>& rows) {
  if (cfg.format == "csv") return csv(header, rows);
  return dump({{"rows", rows_json(header, rows)}});
}

// ---------------------------------------------------------------------------
// Commands

Artifact gap_curve(const RunConfig& cfg) {
  require_grid(cfg);
  std::vector<std::vector<double>> rows;
  for (double p : grid(cfg)) {
    const NoiseParameter noise(p);
    const double chi1 = chi1_closed_form(noise);
    const double chi2 = chi2_prime_closed_form(noise);
    rows.push_back({p, chi1, chi2, chi2 - chi1});
  }
  return {table(cfg, {"p", "chi1", "chi2_prime", "gap"}, rows)};
}

Artifact gamma_bound(const RunConfig& cfg) {
  require_grid(cfg);
  std::vector<std::vector<double>> rows;
  for (double p : grid(cfg)) rows.push_back({p, gamma_rb_bound(NoiseParameter(p))});
  return {table(cfg, {"p", "bound"}, rows)};
}

Artifact regions(const RunConfig& cfg) {
  require_json(cfg, "regions");
  json records = json::array();
  for (auto which : {KnownRegion::kPsiId, KnownRegion::kPhi1, KnownRegion::kMinkowskiPhi1PsiId,
                     KnownRegion::kPhi1xPsiId}) {
    records.push_back(region_to_json(to_string(which), known_region(which)));
  }
  const auto sum = known_region(KnownRegion::kMinkowskiPhi1PsiId);
  const auto product = known_region(KnownRegion::kPhi1xPsiId);
  return {dump({{"regions", records},
                {"minkowski_subset_of_product", subset(sum, product)},
                {"strict", strict_subset(sum, product)},
                {"area_difference", rounded(area(product) - area(sum))}})};
}

Artifact classical_demo(const RunConfig& cfg) {
  require_json(cfg, "classical-demo");
  ClassicalSamplingConfig sampling;
  sampling.seed = require_seed(cfg, "classical-demo");
  if (cfg.trials) sampling.samples = cfg.trials;
  const ClassicalMac bsc = parallel_bsc_mac(binary_entropy_inverse(0.5), 0.0);
  const ClassicalMac adder = xor_mac();
  const auto demo = region_additivity_demo(bsc, adder, sampling);
  json records = json::array();
  records.push_back(region_to_json("bsc_pair", sampled_mac_region(bsc, sampling)));
  records.push_back(region_to_json("xor", sampled_mac_region(adder, sampling)));
  records.push_back(region_to_json("minkowski_bsc_pair_xor", demo.sum_region));
  records.push_back(region_to_json("bsc_pair_x_xor", demo.product_region));
  return {dump({{"regions", records},
                {"samples", sampling.samples},
                {"hausdorff", rounded(demo.hausdorff)},
                {"product_within_sum", demo.product_within_sum},
                {"sum_within_product", demo.sum_within_product}})};
}

std::vector<double> verify_points(const RunConfig& cfg, bool p_given) {
  if (p_given) return {cfg.p};
  return {0.25, 0.5, 0.75};
}

json suite_entropy_max(const RunConfig& cfg, bool p_given) {
  const std::size_t trials = cfg.trials ? cfg.trials : 1000;
  const auto ps = verify_points(cfg, p_given);
  double violation = 0.0, derivative = 0.0;
  bool pass = true;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const auto r = entropy_max_check(NoiseParameter(ps[k]), trials, derive_seed(*cfg.seed, k));
    violation = std::max(violation, r.max_violation);
    derivative = std::max(derivative, r.max_abs_derivative);
    pass = pass && r.pass;
  }
  return {{"suite", "entropy-max"}, {"pass", pass},          {"trials", trials},
          {"p", ps},               {"max_deviation", rounded(violation)}, {"max_abs_derivative", rounded(derivative)}};
}

json suite_min_output(const RunConfig& cfg, bool p_given) {
  const std::size_t trials = cfg.trials ? cfg.trials : 10000;
  const auto ps = verify_points(cfg, p_given);
  double violation = 0.0, defect = 0.0;
  bool pass = true;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const auto r = min_output_entropy_scan(NoiseParameter(ps[k]), trials, derive_seed(*cfg.seed, k));
    violation = std::max(violation, r.max_violation);
    defect = std::max(defect, r.max_equality_defect);
    pass = pass && r.pass;
  }
  return {{"suite", "min-output"}, {"pass", pass},          {"trials", trials},
          {"p", ps},              {"max_deviation", rounded(violation)}, {"max_equality_defect", rounded(defect)}};
}

json suite_classical_additivity(const RunConfig& cfg) {
  const std::size_t pairs = cfg.trials ? cfg.trials : 1000;
  const auto r = additivity_sweep(pairs, *cfg.seed);
  return {{"suite", "classical-additivity"},
          {"pass", r.pass},
          {"trials", pairs},
          {"max_deviation", rounded(std::max(r.max_violation, 0.0))},
          {"max_violation", rounded(r.max_violation)}};
}

json suite_gamma_bound(const RunConfig& cfg) {
  if (cfg.steps < 2) throw UsageError("--steps must be at least 2");
  double max_bound = 0.0;
  for (std::size_t k = 1; k <= cfg.steps; ++k) {
    const double p = 0.5 * static_cast<double>(k) / static_cast<double>(cfg.steps);
    max_bound = std::max(max_bound, gamma_rb_bound(NoiseParameter(p)));
  }
  const double at_one = gamma_rb_bound(NoiseParameter(1.0));
  const bool pass = max_bound < 1.81 && std::abs(at_one - 3.0) <= 1e-9;
  return {{"suite", "gamma-bound"},
          {"pass", pass},
          {"steps", cfg.steps},
          {"max_bound", rounded(max_bound)},
          {"bound_at_1", rounded(at_one)},
          {"max_deviation", rounded(std::abs(at_one - 3.0))}};
}

json suite_dense_coding() {
  const double value = dense_coding_rate();
  double deviation = std::abs(value - 2.0);
  for (int k = 0; k <= 10; ++k) {
    deviation = std::max(deviation, std::abs(remote_dc_rate(NoiseParameter(k / 10.0)) - 2.0));
  }
  return {{"suite", "dense-coding"},
          {"pass", deviation <= 1e-12},
          {"value", rounded(value)},
          {"max_deviation", rounded(deviation)}};
}

json suite_chi_consistency(const RunConfig& cfg, bool p_given) {
  if (cfg.restarts == 0) throw UsageError("--restarts must be positive");
  const auto ps = verify_points(cfg, p_given);
  bool pass = true;
  double deviation = 0.0;
  json points = json::array();
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const NoiseParameter noise(ps[k]);
    SearchConfig search;
    search.restarts = cfg.restarts;
    search.seed = derive_seed(*cfg.seed, k);
    const double brute = chi1_bruteforce(noise, search).value;
    const double closed = chi1_closed_form(noise);
    const double diff = brute - closed;
    pass = pass && diff >= -1e-4 && diff <= 1e-6;
    deviation = std::max(deviation, std::abs(diff));
    points.push_back({{"p", rounded(ps[k])}, {"bruteforce", rounded(brute)}, {"closed_form", rounded(closed)}});
  }
  double protocol_defect = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const NoiseParameter noise(k / 20.0);
    protocol_defect =
        std::max(protocol_defect, std::abs(chi2_prime_protocol(noise) - chi2_prime_closed_form(noise)));
  }
  pass = pass && protocol_defect <= 1e-9;
  return {{"suite", "chi-consistency"},
          {"pass", pass},
          {"restarts", cfg.restarts},
          {"points", points},
          {"max_deviation", rounded(deviation)},
          {"protocol_defect", rounded(protocol_defect)}};
}

Artifact verify(const RunConfig& cfg, bool p_given) {
  require_json(cfg, "verify");
  std::vector<std::string> suites = cfg.suites.empty() ? kSuites : cfg.suites;
  for (const auto& s : suites) {
    if (std::find(kSuites.begin(), kSuites.end(), s) == kSuites.end()) throw UsageError("unknown suite: " + s);
    if (kStochasticSuites.count(s)) require_seed(cfg, "suite " + s);
  }
  if (cfg.steps < 2) throw UsageError("--steps must be at least 2");
  if (cfg.restarts == 0) throw UsageError("--restarts must be positive");

  json reports = json::array();
  bool pass = true;
  for (const auto& s : suites) {
    json r;
    if (s == "entropy-max") {
      r = suite_entropy_max(cfg, p_given);
    } else if (s == "min-output") {
      r = suite_min_output(cfg, p_given);
    } else if (s == "classical-additivity") {
      r = suite_classical_additivity(cfg);
    } else if (s == "gamma-bound") {
      r = suite_gamma_bound(cfg);
    } else if (s == "dense-coding") {
      r = suite_dense_coding();
    } else {
      r = suite_chi_consistency(cfg, p_given);
    }
    pass = pass && r["pass"].get<bool>();
    reports.push_back(std::move(r));
  }
  json report{{"suites", reports}, {"pass", pass}};
  if (cfg.seed) report["seed"] = *cfg.seed;
  return {dump(report), pass ? kExitOk : kExitVerificationFailed};
}

// ---------------------------------------------------------------------------
// Output

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + tmp.string() + " for writing");
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    f.flush();
    if (!f) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot move output into place at " + path + ": " + ec.message());
  }
}

void add_out_and_format(CLI::App* sub, RunConfig& cfg, const std::string& default_format) {
  sub->add_option("--out", cfg.out, "Output path (stdout when absent)");
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_str(default_format);
}

void add_grid(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p-min", cfg.p_min, "Smallest noise parameter")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--p-max", cfg.p_max, "Largest noise parameter")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--steps", cfg.steps, "Number of grid points (>= 2)");
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // folds -0 into 0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical capacity regions of quantum and classical multiple-access channels", "qmac"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::uint64_t seed = 0;

  auto* gap = app.add_subcommand("gap-curve", "Single-use versus two-use Holevo rates (CSV p,chi1,chi2_prime,gap)");
  add_grid(gap, cfg);
  add_out_and_format(gap, cfg, "csv");

  auto* reg = app.add_subcommand("regions", "Named two-sender regions and the Minkowski-versus-product verdict");
  add_out_and_format(reg, cfg, "json");

  auto* ver = app.add_subcommand("verify", "Run numerical verification suites");
  ver->add_option("--suite", cfg.suites, "Suite to run (repeatable; all when absent)");
  ver->add_option("--seed", seed, "Master seed for stochastic suites");
  ver->add_option("--trials", cfg.trials, "Trials per stochastic suite (suite default when absent)");
  ver->add_option("--restarts", cfg.restarts, "Restarts for the brute-force search");
  ver->add_option("--steps", cfg.steps, "Grid points on (0, 0.5] for the relay bound");
  ver->add_option("--p", cfg.p, "Single noise parameter instead of {0.25, 0.5, 0.75}")->check(CLI::Range(0.0, 1.0));
  add_out_and_format(ver, cfg, "json");

  auto* demo = app.add_subcommand("classical-demo", "Sampled classical regions, their sum and the product region");
  demo->add_option("--seed", seed, "Master seed for sampling");
  demo->add_option("--trials", cfg.trials, "Random input laws per region");
  add_out_and_format(demo, cfg, "json");

  auto* gamma = app.add_subcommand("gamma-bound", "Regularized relay rate bound (CSV p,bound)");
  add_grid(gamma, cfg);
  add_out_and_format(gamma, cfg, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen->count("--format") == 0) {
    cfg.format = (chosen == gap || chosen == gamma) ? "csv" : "json";
  }
  if (chosen == ver) cfg.steps = chosen->count("--steps") ? cfg.steps : 50;
  if (chosen == gamma && chosen->count("--steps") == 0) cfg.steps = 51;
  if (chosen->get_option_no_throw("--seed") != nullptr && chosen->count("--seed")) cfg.seed = seed;

  try {
    Artifact artifact;
    if (chosen == gap) {
      artifact = gap_curve(cfg);
    } else if (chosen == reg) {
      artifact = regions(cfg);
    } else if (chosen == ver) {
      artifact = verify(cfg, chosen->count("--p") > 0);
    } else if (chosen == demo) {
      artifact = classical_demo(cfg);
    } else {
      artifact = gamma_bound(cfg);
    }
    if (cfg.out.empty()) {
      out << artifact.text;
      out.flush();
    } else {
      write_atomically(cfg.out, artifact.text);
    }
    return artifact.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << chosen->help();
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qmac::cli
