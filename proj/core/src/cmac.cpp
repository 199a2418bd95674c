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

#include "qmac/cmac.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "qmac/error.hpp"
#include "qmac/optimize.hpp"

namespace qmac {
namespace {

constexpr double kRowTol = 1e-9;
constexpr double kAdditivityTol = 1e-9;
constexpr double kBlahutArimotoGap = 1e-10;
constexpr std::size_t kBlahutArimotoMaxIterations = 100000;

double entropy_bits(std::span<const double> dist) {
  double h = 0.0;
  for (double x : dist) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

void require_distribution(std::span<const double> dist, const char* what) {
  double total = 0.0;
  for (double x : dist) {
    if (!(x >= -1e-12)) throw InvalidArgument(std::string(what) + ": negative probability");
    total += x;
  }
  if (std::abs(total - 1.0) > kRowTol) throw InvalidArgument(std::string(what) + ": does not sum to 1");
}

std::vector<double> product_law(const std::vector<std::vector<double>>& laws) {
  std::vector<double> joint{1.0};
  for (const auto& law : laws) {
    std::vector<double> next;
    next.reserve(joint.size() * law.size());
    for (double a : joint) {
      for (double b : law) next.push_back(a * b);
    }
    joint = std::move(next);
  }
  return joint;
}

// Uniform over {0, ..., m-1} for m = 1..size.
std::vector<std::vector<double>> prefix_uniform_laws(std::size_t size) {
  std::vector<std::vector<double>> laws;
  for (std::size_t m = 1; m <= size; ++m) {
    std::vector<double> law(size, 0.0);
    for (std::size_t k = 0; k < m; ++k) law[k] = 1.0 / static_cast<double>(m);
    laws.push_back(std::move(law));
  }
  return laws;
}

void require_senders(const ClassicalMac& ch, std::size_t n, const char* what) {
  if (ch.senders() != n) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(n) + " sender(s)");
  }
}

}  // namespace

ClassicalMac::ClassicalMac(std::vector<std::size_t> input_sizes, std::size_t output_size,
                           std::vector<double> table)
    : input_sizes_(std::move(input_sizes)), output_size_(output_size), table_(std::move(table)) {
  if (input_sizes_.empty()) throw InvalidArgument("classical MAC needs at least one sender");
  if (output_size_ == 0) throw InvalidArgument("classical MAC needs a nonempty output alphabet");
  for (auto s : input_sizes_) {
    if (s == 0) throw InvalidArgument("classical MAC input alphabet is empty");
  }
  const std::size_t rows = product(input_sizes_);
  if (table_.size() != rows * output_size_) throw DimensionError("classical MAC table has the wrong size");
  for (std::size_t x = 0; x < rows; ++x) require_distribution(row(x), "classical MAC row");
}

double conditional_information(std::span<const std::size_t> var_sizes, std::span<const double> joint,
                               const ClassicalMac& ch, std::uint32_t subset) {
  const std::size_t n = product(var_sizes);
  if (n != ch.input_count() || joint.size() != n) {
    throw DimensionError("conditional_information: input law does not match the channel");
  }
  const std::size_t ny = ch.output_size();

  // Linear index of the complement variables for every full input index.
  std::size_t complement_count = 1;
  for (std::size_t k = 0; k < var_sizes.size(); ++k) {
    if (!(subset >> k & 1U)) complement_count *= var_sizes[k];
  }
  std::vector<double> cond(complement_count * ny, 0.0);
  std::vector<double> marginal(complement_count, 0.0);

  double h_y_given_x = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    const double px = joint[x];
    if (px <= 0.0) continue;
    h_y_given_x += px * entropy_bits(ch.row(x));

    std::size_t rest = x;
    std::size_t c = 0, radix = 1;
    for (std::size_t k = var_sizes.size(); k-- > 0;) {
      const std::size_t digit = rest % var_sizes[k];
      rest /= var_sizes[k];
      if (!(subset >> k & 1U)) {
        c += digit * radix;
        radix *= var_sizes[k];
      }
    }
    marginal[c] += px;
    for (std::size_t y = 0; y < ny; ++y) cond[c * ny + y] += px * ch.prob(x, y);
  }

  double h_y_given_rest = 0.0;
  for (std::size_t c = 0; c < complement_count; ++c) {
    if (marginal[c] <= 0.0) continue;
    for (std::size_t y = 0; y < ny; ++y) {
      const double pj = cond[c * ny + y];
      if (pj > 0.0) h_y_given_rest -= pj * std::log2(pj / marginal[c]);
    }
  }
  return h_y_given_rest - h_y_given_x;
}

std::vector<SubsetBound> mac_region(const ClassicalMac& ch, const SenderDistributions& dist) {
  if (dist.per_sender.size() != ch.senders()) throw DimensionError("mac_region: one law per sender required");
  for (std::size_t i = 0; i < ch.senders(); ++i) {
    if (dist.per_sender[i].size() != ch.input_sizes()[i]) {
      throw DimensionError("mac_region: law size does not match the sender alphabet");
    }
    require_distribution(dist.per_sender[i], "sender distribution");
  }
  const auto joint = product_law(dist.per_sender);
  std::vector<SubsetBound> bounds;
  const std::uint32_t full = (1U << ch.senders()) - 1U;
  for (std::uint32_t s = 1; s <= full; ++s) {
    bounds.push_back({s, conditional_information(ch.input_sizes(), joint, ch, s)});
  }
  return bounds;
}

std::vector<Halfspace> to_halfspaces(std::span<const SubsetBound> bounds) {
  std::vector<Halfspace> hs;
  for (const auto& b : bounds) {
    if (b.senders == 0 || b.senders > 3U) throw DimensionError("to_halfspaces: two senders only");
    hs.push_back({(b.senders & 1U) ? 1.0 : 0.0, (b.senders & 2U) ? 1.0 : 0.0, std::max(b.information, 0.0)});
  }
  return hs;
}

RateRegion2D mac_region_2d(const ClassicalMac& ch, const SenderDistributions& dist) {
  require_senders(ch, 2, "mac_region_2d");
  const auto bounds = mac_region(ch, dist);
  return region_from_halfspaces(to_halfspaces(bounds));
}

ClassicalMac product_mac(const ClassicalMac& c1, const ClassicalMac& c2) {
  if (c1.senders() != c2.senders()) throw DimensionError("product_mac: sender counts differ");
  const std::size_t n = c1.senders();

  // Variables in order (x_{1,1}, x_{1,2}, x_{2,1}, x_{2,2}, ...).
  std::vector<std::size_t> var_sizes;
  std::vector<std::size_t> input_sizes;
  for (std::size_t i = 0; i < n; ++i) {
    var_sizes.push_back(c1.input_sizes()[i]);
    var_sizes.push_back(c2.input_sizes()[i]);
    input_sizes.push_back(c1.input_sizes()[i] * c2.input_sizes()[i]);
  }
  const std::size_t rows = product(var_sizes);
  const std::size_t ny1 = c1.output_size();
  const std::size_t ny2 = c2.output_size();
  std::vector<double> table(rows * ny1 * ny2);

  std::vector<std::size_t> digits(2 * n);
  for (std::size_t x = 0; x < rows; ++x) {
    std::size_t rest = x;
    for (std::size_t k = 2 * n; k-- > 0;) {
      digits[k] = rest % var_sizes[k];
      rest /= var_sizes[k];
    }
    std::size_t x1 = 0, x2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      x1 = x1 * c1.input_sizes()[i] + digits[2 * i];
      x2 = x2 * c2.input_sizes()[i] + digits[2 * i + 1];
    }
    for (std::size_t y1 = 0; y1 < ny1; ++y1) {
      for (std::size_t y2 = 0; y2 < ny2; ++y2) {
        table[x * ny1 * ny2 + y1 * ny2 + y2] = c1.prob(x1, y1) * c2.prob(x2, y2);
      }
    }
  }
  return ClassicalMac(std::move(input_sizes), ny1 * ny2, std::move(table));
}

nlohmann::json to_json(const CheckReport& report) {
  return {{"check", report.check},
          {"trials", report.trials},
          {"max_violation", round_significant(report.max_violation)},
          {"pass", report.pass}};
}

CheckReport additivity_check(const ClassicalMac& c1, const ClassicalMac& c2, std::size_t trials,
                             std::uint64_t seed) {
  if (c1.senders() != c2.senders()) throw DimensionError("additivity_check: sender counts differ");
  const std::size_t n = c1.senders();
  if (2 * n > 31) throw DimensionError("additivity_check: too many senders");
  const ClassicalMac both = product_mac(c1, c2);

  std::vector<std::size_t> var_sizes;
  for (std::size_t i = 0; i < n; ++i) {
    var_sizes.push_back(c1.input_sizes()[i]);
    var_sizes.push_back(c2.input_sizes()[i]);
  }

  CheckReport report;
  report.check = "classical-additivity";
  report.trials = trials;
  report.max_violation = -std::numeric_limits<double>::infinity();

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = stream_rng(seed, t);
    // Per-sender joint law over (x_{i,1}, x_{i,2}) and its two marginals.
    std::vector<std::vector<double>> pair_laws, first_laws, second_laws;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t a = c1.input_sizes()[i];
      const std::size_t b = c2.input_sizes()[i];
      auto law = dirichlet_uniform(a * b, rng);
      std::vector<double> first(a, 0.0), second(b, 0.0);
      for (std::size_t u = 0; u < a; ++u) {
        for (std::size_t v = 0; v < b; ++v) {
          first[u] += law[u * b + v];
          second[v] += law[u * b + v];
        }
      }
      pair_laws.push_back(std::move(law));
      first_laws.push_back(std::move(first));
      second_laws.push_back(std::move(second));
    }
    const auto joint = product_law(pair_laws);
    const auto joint1 = product_law(first_laws);
    const auto joint2 = product_law(second_laws);

    const std::uint32_t full = (1U << (2 * n)) - 1U;
    for (std::uint32_t s = 1; s <= full; ++s) {
      std::uint32_t s1 = 0, s2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (s >> (2 * i) & 1U) s1 |= 1U << i;
        if (s >> (2 * i + 1) & 1U) s2 |= 1U << i;
      }
      const double lhs = conditional_information(var_sizes, joint, both, s);
      const double rhs = conditional_information(c1.input_sizes(), joint1, c1, s1) +
                         conditional_information(c2.input_sizes(), joint2, c2, s2);
      report.max_violation = std::max(report.max_violation, lhs - rhs);
    }
  }
  if (trials == 0) report.max_violation = 0.0;
  report.pass = report.max_violation <= kAdditivityTol;
  return report;
}

CheckReport additivity_sweep(std::size_t pairs, std::uint64_t seed, std::size_t inputs_per_pair) {
  CheckReport report;
  report.check = "classical-additivity";
  report.trials = pairs;
  report.max_violation = pairs == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < pairs; ++k) {
    Rng rng = stream_rng(seed, k);
    std::uniform_int_distribution<std::size_t> senders(1, 2);
    std::uniform_int_distribution<std::size_t> alphabet(2, 4);
    const std::size_t n = senders(rng);
    auto draw = [&] {
      std::vector<std::size_t> sizes(n);
      for (auto& s : sizes) s = alphabet(rng);
      const std::size_t out = alphabet(rng);
      return random_mac(std::move(sizes), out, rng);
    };
    const ClassicalMac c1 = draw();
    const ClassicalMac c2 = draw();
    const auto pair_report = additivity_check(c1, c2, inputs_per_pair, derive_seed(seed, k));
    report.max_violation = std::max(report.max_violation, pair_report.max_violation);
  }
  report.pass = report.max_violation <= kAdditivityTol;
  return report;
}

RateRegion2D sampled_mac_region(const ClassicalMac& ch, const ClassicalSamplingConfig& cfg) {
  require_senders(ch, 2, "sampled_mac_region");
  std::vector<RatePoint> points{{0.0, 0.0}};
  auto absorb = [&](std::vector<double> first, std::vector<double> second) {
    const auto region = mac_region_2d(ch, SenderDistributions{{std::move(first), std::move(second)}});
    points.insert(points.end(), region.vertices().begin(), region.vertices().end());
  };
  for (const auto& first : prefix_uniform_laws(ch.input_sizes()[0])) {
    for (const auto& second : prefix_uniform_laws(ch.input_sizes()[1])) absorb(first, second);
  }
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    Rng rng = stream_rng(cfg.seed, s);
    auto first = dirichlet_uniform(ch.input_sizes()[0], rng);
    auto second = dirichlet_uniform(ch.input_sizes()[1], rng);
    absorb(std::move(first), std::move(second));
  }
  return convex_hull(points);
}

AdditivityDemo region_additivity_demo(const ClassicalMac& c1, const ClassicalMac& c2,
                                      const ClassicalSamplingConfig& cfg, double tolerance) {
  require_senders(c1, 2, "region_additivity_demo");
  require_senders(c2, 2, "region_additivity_demo");
  AdditivityDemo demo{
      minkowski_sum(sampled_mac_region(c1, cfg), sampled_mac_region(c2, cfg)),
      sampled_mac_region(product_mac(c1, c2), cfg),
  };
  double product_excess = 0.0, sum_excess = 0.0;
  for (RatePoint u : demo.product_region.vertices()) {
    product_excess = std::max(product_excess, distance_to_region(demo.sum_region, u));
  }
  for (RatePoint u : demo.sum_region.vertices()) {
    sum_excess = std::max(sum_excess, distance_to_region(demo.product_region, u));
  }
  demo.hausdorff = std::max(product_excess, sum_excess);
  demo.product_within_sum = product_excess <= tolerance;
  demo.sum_within_product = sum_excess <= tolerance;
  return demo;
}

BlahutArimotoResult blahut_arimoto(const ClassicalMac& ch) {
  require_senders(ch, 1, "blahut_arimoto");
  const std::size_t nx = ch.input_count();
  const std::size_t ny = ch.output_size();

  BlahutArimotoResult result;
  result.input.assign(nx, 1.0 / static_cast<double>(nx));
  std::vector<double> q(ny), divergence(nx);

  for (std::size_t it = 0; it < kBlahutArimotoMaxIterations; ++it) {
    result.iterations = it + 1;
    std::fill(q.begin(), q.end(), 0.0);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < ny; ++y) q[y] += result.input[x] * ch.prob(x, y);
    }
    for (std::size_t x = 0; x < nx; ++x) {
      double d = 0.0;
      for (std::size_t y = 0; y < ny; ++y) {
        const double w = ch.prob(x, y);
        if (w > 0.0) d += w * std::log2(w / q[y]);
      }
      divergence[x] = d;
    }
    // I_L = log2 sum_x r(x) 2^{D(x)} <= C <= I_U = max_x D(x).
    double weighted = 0.0;
    for (std::size_t x = 0; x < nx; ++x) weighted += result.input[x] * std::exp2(divergence[x]);
    const double lower = std::log2(weighted);
    const double upper = *std::max_element(divergence.begin(), divergence.end());
    result.capacity = lower;
    result.upper_bound = upper;
    if (upper - lower < kBlahutArimotoGap) break;
    for (std::size_t x = 0; x < nx; ++x) result.input[x] *= std::exp2(divergence[x]) / weighted;
  }
  result.capacity = std::max(result.capacity, 0.0);
  return result;
}

ClassicalMac lambda2_channel(NoiseParameter noise) {
  const double p = noise.value();
  std::vector<double> table(16, 0.0);
  table[0] = 1.0;
  for (std::size_t i = 1; i < 4; ++i) {
    table[i * 4 + i] = p;
    table[i * 4 + 0] = 1.0 - p;
  }
  return ClassicalMac({4}, 4, std::move(table));
}

double gamma_rb_bound(NoiseParameter p) { return blahut_arimoto(lambda2_channel(p)).capacity + 1.0; }

GammaSingleCopyOptimum gamma_single_copy_rb(NoiseParameter noise, const SearchConfig& cfg) {
  if (cfg.restarts == 0) throw InvalidArgument("gamma_single_copy_rb: restarts must be positive");
  if (cfg.iterations == 0) throw InvalidArgument("gamma_single_copy_rb: iterations must be positive");
  const KrausChannel ch = gamma_p(noise.value());
  constexpr std::size_t kSymbols = 4;
  const std::size_t qubit_angles = sphere_angle_count(2);
  const std::size_t prob_angles = simplex_angle_count(kSymbols);

  auto decode = [&](std::span<const double> x) {
    GammaSingleCopyOptimum d;
    d.a1_state = unit_vector_from_angles(x.subspan(0, qubit_angles), 2);
    d.a2_state = unit_vector_from_angles(x.subspan(qubit_angles, qubit_angles), 2);
    d.b_probs = probabilities_from_angles(x.subspan(2 * qubit_angles, prob_angles), kSymbols);
    return d;
  };
  auto objective = [&](std::span<const double> x) {
    const auto d = decode(x);
    std::vector<DensityOperator> outputs;
    for (std::size_t j = 0; j < kSymbols; ++j) {
      ComplexVector v = tensor(tensor(ComplexMatrix(d.a1_state), ComplexMatrix(PureState::basis({4}, j).amplitudes())),
                               ComplexMatrix(d.a2_state));
      v /= v.norm();
      outputs.push_back(apply(ch, PureState(std::move(v), {2, 4, 2})));
    }
    return holevo_quantity(d.b_probs, outputs);
  };
  auto encode = [&](const ComplexVector& a1, const ComplexVector& a2, std::span<const double> probs) {
    std::vector<double> x = angles_from_unit_vector(a1);
    const auto x2 = angles_from_unit_vector(a2);
    const auto xp = angles_from_probabilities(probs);
    x.insert(x.end(), x2.begin(), x2.end());
    x.insert(x.end(), xp.begin(), xp.end());
    return x;
  };

  CoordinateAscentOptions options;
  options.iterations = cfg.iterations;
  GammaSingleCopyOptimum best;
  best.value = -1.0;
  for (std::size_t restart = 0; restart < cfg.restarts; ++restart) {
    std::vector<double> x0;
    if (restart == 0) {
      const auto zero = PureState::basis({2}, 0).amplitudes();
      const std::array<double, kSymbols> probs{0.5, 0.5, 0.0, 0.0};
      x0 = encode(zero, zero, probs);
    } else {
      Rng rng = stream_rng(cfg.seed, restart);
      const auto a1 = haar_pure_state({2}, rng).amplitudes();
      const auto a2 = haar_pure_state({2}, rng).amplitudes();
      const auto probs = dirichlet_uniform(kSymbols, rng);
      x0 = encode(a1, a2, probs);
    }
    const auto result = coordinate_ascent(objective, std::move(x0), options);
    if (result.value > best.value) {
      best = decode(result.x);
      best.value = result.value;
      best.restart = restart;
    }
  }
  return best;
}

double gamma_entangled_rb(NoiseParameter noise) {
  const KrausChannel gamma = gamma_p(noise.value());
  const KrausChannel ideal = psi_id();
  // Prepared as A1 R1 (x) B (x) A2 R2 with A1R1 = A2R2 = |Psi+>; reordered to
  // A1, B, A2 (into gamma_p) followed by R1, R2 (into psi_id).
  const std::array<std::size_t, 5> to_channel_order{0, 2, 3, 1, 4};
  std::vector<DensityOperator> signals;
  for (std::size_t j = 0; j < 4; ++j) {
    const PureState prepared = tensor(tensor(psi_plus(), PureState::basis({4}, j)), psi_plus());
    DensityOperator rho = permute_systems(prepared, to_channel_order).density();
    rho = apply_on(gamma, rho, 0);
    rho = apply_on(ideal, rho, 2);
    signals.push_back(std::move(rho));
  }
  const std::vector<double> probs(4, 0.25);
  return holevo_quantity(probs, signals);
}

// ---------------------------------------------------------------------------
// Example channels

ClassicalMac binary_symmetric_channel(double crossover) {
  if (!(crossover >= 0.0 && crossover <= 1.0)) throw InvalidArgument("BSC crossover must lie in [0, 1]");
  return ClassicalMac({2}, 2, {1.0 - crossover, crossover, crossover, 1.0 - crossover});
}

ClassicalMac binary_erasure_channel(double erasure) {
  if (!(erasure >= 0.0 && erasure <= 1.0)) throw InvalidArgument("erasure probability must lie in [0, 1]");
  // Outputs: 0, 1, erased.
  return ClassicalMac({2}, 3, {1.0 - erasure, 0.0, erasure, 0.0, 1.0 - erasure, erasure});
}

ClassicalMac noiseless_channel(std::size_t alphabet) {
  std::vector<double> table(alphabet * alphabet, 0.0);
  for (std::size_t k = 0; k < alphabet; ++k) table[k * alphabet + k] = 1.0;
  return ClassicalMac({alphabet}, alphabet, std::move(table));
}

ClassicalMac parallel_bsc_mac(double crossover1, double crossover2) {
  const ClassicalMac a = binary_symmetric_channel(crossover1);
  const ClassicalMac b = binary_symmetric_channel(crossover2);
  std::vector<double> table(16);
  for (std::size_t x1 = 0; x1 < 2; ++x1) {
    for (std::size_t x2 = 0; x2 < 2; ++x2) {
      for (std::size_t y1 = 0; y1 < 2; ++y1) {
        for (std::size_t y2 = 0; y2 < 2; ++y2) {
          table[(x1 * 2 + x2) * 4 + y1 * 2 + y2] = a.prob(x1, y1) * b.prob(x2, y2);
        }
      }
    }
  }
  return ClassicalMac({2, 2}, 4, std::move(table));
}

ClassicalMac xor_mac() {
  return ClassicalMac({2, 2}, 2, {1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0});
}

ClassicalMac constant_mac(std::vector<std::size_t> input_sizes) {
  const std::size_t rows = product(input_sizes);
  std::vector<double> table(rows, 1.0);
  return ClassicalMac(std::move(input_sizes), 1, std::move(table));
}

ClassicalMac random_mac(std::vector<std::size_t> input_sizes, std::size_t output_size, Rng& rng) {
  const std::size_t rows = product(input_sizes);
  std::vector<double> table;
  table.reserve(rows * output_size);
  for (std::size_t x = 0; x < rows; ++x) {
    const auto row = dirichlet_uniform(output_size, rng);
    table.insert(table.end(), row.begin(), row.end());
  }
  return ClassicalMac(std::move(input_sizes), output_size, std::move(table));
}

double binary_entropy_inverse(double h) {
  if (!(h >= 0.0 && h <= 1.0)) throw InvalidArgument("binary entropy must lie in [0, 1]");
  double lo = 0.0, hi = 0.5;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    const std::array<double, 2> dist{mid, 1.0 - mid};
    if (entropy_bits(dist) < h) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// JSON layout

namespace {

nlohmann::json nest_rows(const ClassicalMac& ch, std::size_t level, std::size_t prefix) {
  if (level == ch.senders()) {
    const auto r = ch.row(prefix);
    return nlohmann::json(std::vector<double>(r.begin(), r.end()));
  }
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t x = 0; x < ch.input_sizes()[level]; ++x) {
    out.push_back(nest_rows(ch, level + 1, prefix * ch.input_sizes()[level] + x));
  }
  return out;
}

void flatten_rows(const nlohmann::json& node, const std::vector<std::size_t>& sizes, std::size_t level,
                  std::size_t output_size, std::vector<double>& table) {
  if (!node.is_array()) throw InvalidArgument("classical MAC table must be nested lists");
  if (level == sizes.size()) {
    if (node.size() != output_size) throw DimensionError("classical MAC row has the wrong length");
    for (const auto& v : node) table.push_back(v.get<double>());
    return;
  }
  if (node.size() != sizes[level]) throw DimensionError("classical MAC table does not match input_sizes");
  for (const auto& child : node) flatten_rows(child, sizes, level + 1, output_size, table);
}

}  // namespace

nlohmann::json mac_to_json(const ClassicalMac& ch) {
  return {{"input_sizes", ch.input_sizes()}, {"output_size", ch.output_size()}, {"table", nest_rows(ch, 0, 0)}};
}

ClassicalMac mac_from_json(const nlohmann::json& j) {
  if (!j.contains("input_sizes") || !j.contains("output_size") || !j.contains("table")) {
    throw InvalidArgument("classical MAC record needs input_sizes, output_size and table");
  }
  const auto sizes = j["input_sizes"].get<std::vector<std::size_t>>();
  const auto output_size = j["output_size"].get<std::size_t>();
  std::vector<double> table;
  flatten_rows(j["table"], sizes, 0, output_size, table);
  return ClassicalMac(sizes, output_size, std::move(table));
}

}  // namespace qmac
