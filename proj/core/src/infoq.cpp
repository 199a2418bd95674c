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

#include "qmac/infoq.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "qmac/error.hpp"
#include "qmac/optimize.hpp"
#include "qmac/random.hpp"

namespace qmac {
namespace {

constexpr double kEnsembleSumTol = 1e-9;

// x log2 x with the 0 log 0 = 0 convention.
double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double min_output_bound(double p) {
  const std::array<double, 4> dist{1.0 - 3.0 * p / 4.0, p / 4.0, p / 4.0, p / 4.0};
  return shannon_entropy(dist);
}

DensityOperator average_state(std::span<const double> probs, std::span<const DensityOperator> states) {
  ComplexMatrix avg = ComplexMatrix::Zero(states.front().matrix().rows(), states.front().matrix().cols());
  for (std::size_t k = 0; k < states.size(); ++k) avg += probs[k] * states[k].matrix();
  return DensityOperator::trusted(std::move(avg), states.front().dims());
}

std::vector<DensityOperator> channel_outputs(const KrausChannel& ch, const Ensemble& ens) {
  std::vector<DensityOperator> out;
  out.reserve(ens.size());
  for (const auto& s : ens.states()) out.push_back(apply(ch, s));
  return out;
}

}  // namespace

NoiseParameter::NoiseParameter(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("noise parameter must lie in [0, 1]");
}

Ensemble::Ensemble(std::vector<double> probs, std::vector<DensityOperator> states)
    : probs_(std::move(probs)), states_(std::move(states)) {
  if (probs_.empty() || probs_.size() != states_.size()) {
    throw InvalidArgument("ensemble needs one probability per state");
  }
  double total = 0.0;
  for (double x : probs_) {
    if (!(x >= 0.0)) throw InvalidArgument("ensemble probability is negative");
    total += x;
  }
  if (std::abs(total - 1.0) > kEnsembleSumTol) throw InvalidArgument("ensemble probabilities do not sum to 1");
  for (const auto& s : states_) {
    if (s.dims() != states_.front().dims()) throw DimensionError("ensemble states have mixed dims");
  }
}

Ensemble Ensemble::uniform(std::vector<DensityOperator> states) {
  std::vector<double> probs(states.size(), states.empty() ? 0.0 : 1.0 / static_cast<double>(states.size()));
  return Ensemble(std::move(probs), std::move(states));
}

Ensemble Ensemble::uniform_basis(const Dims& dims, std::size_t count) {
  if (count == 0 || count > product(dims)) throw InvalidArgument("uniform_basis: bad state count");
  std::vector<DensityOperator> states;
  for (std::size_t k = 0; k < count; ++k) states.push_back(PureState::basis(dims, k).density());
  return uniform(std::move(states));
}

double holevo_quantity(std::span<const double> probs, std::span<const DensityOperator> states) {
  if (probs.size() != states.size() || states.empty()) {
    throw InvalidArgument("holevo_quantity: one probability per state required");
  }
  double mean_entropy = 0.0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].dims() != states.front().dims()) throw DimensionError("holevo_quantity: mixed dims");
    if (probs[k] > 0.0) mean_entropy += probs[k] * von_neumann_entropy(states[k]);
  }
  const double chi = von_neumann_entropy(average_state(probs, states)) - mean_entropy;
  return std::max(chi, 0.0);
}

double holevo_chi(const KrausChannel& ch, const Ensemble& ens) {
  if (ens.dims() != ch.in_dims()) throw DimensionError("ensemble dims do not match channel input");
  const auto outputs = channel_outputs(ch, ens);
  return holevo_quantity(ens.probs(), outputs);
}

MacInfoTriple mac_mutual_informations(const KrausChannel& ch, const Ensemble& alice,
                                      const Ensemble& bob) {
  Dims joint = alice.dims();
  joint.insert(joint.end(), bob.dims().begin(), bob.dims().end());
  if (joint != ch.in_dims()) throw DimensionError("ensemble dims do not match channel input");

  const std::size_t na = alice.size();
  const std::size_t nb = bob.size();
  // outputs[i * nb + j] = Phi(a_i (x) b_j)
  std::vector<DensityOperator> outputs;
  outputs.reserve(na * nb);
  for (const auto& a : alice.states()) {
    for (const auto& b : bob.states()) outputs.push_back(apply(ch, tensor(a, b)));
  }

  MacInfoTriple triple;
  for (std::size_t j = 0; j < nb; ++j) {
    std::vector<DensityOperator> column;
    for (std::size_t i = 0; i < na; ++i) column.push_back(outputs[i * nb + j]);
    triple.i_a_c_given_b += bob.probs()[j] * holevo_quantity(alice.probs(), column);
  }
  for (std::size_t i = 0; i < na; ++i) {
    std::span<const DensityOperator> row(outputs.data() + i * nb, nb);
    triple.i_b_c_given_a += alice.probs()[i] * holevo_quantity(bob.probs(), row);
  }
  std::vector<double> joint_probs;
  joint_probs.reserve(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) joint_probs.push_back(alice.probs()[i] * bob.probs()[j]);
  }
  triple.i_ab_c = holevo_quantity(joint_probs, outputs);
  return triple;
}

double chi1_closed_form(NoiseParameter noise) {
  const double p = noise.value();
  const double hi = (2.0 - p) / 8.0;
  const double lo = p / 8.0;
  const std::array<double, 8> total{hi, hi, hi, hi, lo, lo, lo, lo};
  return shannon_entropy(total) - min_output_bound(p);
}

double chi2_prime_closed_form(NoiseParameter noise) {
  const double p = noise.value();
  // The averaged two-use output has eigenvalue (2-p)p/64 with multiplicity
  // 48 and (4-6p+3p^2)/64 with multiplicity 16.
  const double cross = (2.0 - p) * p / 64.0;
  const double diag = (4.0 - 6.0 * p + 3.0 * p * p) / 64.0;
  const double total_entropy_per_use = -(24.0 * xlog2x(cross) + 8.0 * xlog2x(diag));
  return total_entropy_per_use - min_output_bound(p);
}

double chi2_prime_protocol(NoiseParameter noise) {
  const KrausChannel ch = phi_p(noise.value());
  // Register order after permutation: A1 (4), B1 (2), A2 (4), B2 (2).
  const std::array<std::size_t, 4> to_channel_order{0, 2, 1, 3};
  std::vector<DensityOperator> signals;
  signals.reserve(16);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      // Prepared as A1 (x) A2 (x) B1B2.
      const PureState prepared =
          tensor(tensor(PureState::basis({4}, i), PureState::basis({4}, j)), psi_plus());
      DensityOperator rho = permute_systems(prepared, to_channel_order).density();
      rho = apply_on(ch, rho, 0);
      rho = apply_on(ch, rho, 2);
      signals.push_back(std::move(rho));
    }
  }
  const std::vector<double> probs(16, 1.0 / 16.0);
  return holevo_quantity(probs, signals) / 2.0;
}

double superadditivity_gap(NoiseParameter p) {
  return chi2_prime_closed_form(p) - chi1_closed_form(p);
}

Chi1Optimum chi1_bruteforce(NoiseParameter noise, const SearchConfig& cfg) {
  if (cfg.restarts == 0) throw InvalidArgument("chi1_bruteforce: restarts must be positive");
  if (cfg.iterations == 0) throw InvalidArgument("chi1_bruteforce: iterations must be positive");

  constexpr std::size_t kAliceStates = 4;
  constexpr std::size_t kAliceDim = 4;
  constexpr std::size_t kBobDim = 2;
  const std::size_t alice_angles = sphere_angle_count(kAliceDim);
  const std::size_t prob_angles = simplex_angle_count(kAliceStates);
  const std::size_t bob_angles = sphere_angle_count(kBobDim);
  const std::size_t prob_offset = kAliceStates * alice_angles;
  const std::size_t bob_offset = prob_offset + prob_angles;
  const std::size_t n_params = bob_offset + bob_angles;

  const KrausChannel ch = phi_p(noise.value());

  struct Decoded {
    std::vector<double> probs;
    std::vector<ComplexVector> alice;
    ComplexVector bob;
  };
  auto decode = [&](std::span<const double> x) {
    Decoded d;
    for (std::size_t k = 0; k < kAliceStates; ++k) {
      d.alice.push_back(unit_vector_from_angles(x.subspan(k * alice_angles, alice_angles), kAliceDim));
    }
    d.probs = probabilities_from_angles(x.subspan(prob_offset, prob_angles), kAliceStates);
    d.bob = unit_vector_from_angles(x.subspan(bob_offset, bob_angles), kBobDim);
    return d;
  };
  // A coordinate move touches one Alice state, the probabilities, or Bob;
  // outputs and entropies of untouched states are reused.
  struct Cache {
    std::vector<double> x;
    std::vector<ComplexMatrix> outputs;
    std::vector<double> entropies;
  } cache;
  auto slice_changed = [&](std::span<const double> x, std::size_t offset, std::size_t count) {
    return cache.x.empty() ||
           !std::equal(x.begin() + offset, x.begin() + offset + count, cache.x.begin() + offset);
  };
  auto objective = [&](std::span<const double> x) {
    const bool bob_changed = slice_changed(x, bob_offset, bob_angles);
    if (cache.x.empty()) {
      cache.outputs.assign(kAliceStates, ComplexMatrix());
      cache.entropies.assign(kAliceStates, 0.0);
    }
    const ComplexVector bob = unit_vector_from_angles(x.subspan(bob_offset, bob_angles), kBobDim);
    for (std::size_t k = 0; k < kAliceStates; ++k) {
      if (!bob_changed && !slice_changed(x, k * alice_angles, alice_angles)) continue;
      const ComplexVector a = unit_vector_from_angles(x.subspan(k * alice_angles, alice_angles), kAliceDim);
      ComplexVector joint = tensor(ComplexMatrix(a), ComplexMatrix(bob));
      joint /= joint.norm();
      const DensityOperator out = apply(ch, PureState(std::move(joint), {kAliceDim, kBobDim}));
      cache.entropies[k] = von_neumann_entropy(out);
      cache.outputs[k] = out.matrix();
    }
    cache.x.assign(x.begin(), x.end());

    const auto probs = probabilities_from_angles(x.subspan(prob_offset, prob_angles), kAliceStates);
    ComplexMatrix average = ComplexMatrix::Zero(kAliceDim * kBobDim, kAliceDim * kBobDim);
    double mean_entropy = 0.0;
    for (std::size_t k = 0; k < kAliceStates; ++k) {
      average += probs[k] * cache.outputs[k];
      mean_entropy += probs[k] * cache.entropies[k];
    }
    const double chi = entropy_of_spectrum(hermitian_eigenvalues(average)) - mean_entropy;
    return std::max(chi, 0.0);
  };
  auto encode = [&](const std::vector<ComplexVector>& alice, std::span<const double> probs,
                    const ComplexVector& bob) {
    std::vector<double> x;
    x.reserve(n_params);
    for (const auto& a : alice) {
      const auto angles = angles_from_unit_vector(a);
      x.insert(x.end(), angles.begin(), angles.end());
    }
    const auto pa = angles_from_probabilities(probs);
    x.insert(x.end(), pa.begin(), pa.end());
    const auto ba = angles_from_unit_vector(bob);
    x.insert(x.end(), ba.begin(), ba.end());
    return x;
  };

  CoordinateAscentOptions options;
  options.iterations = cfg.iterations;

  Chi1Optimum best;
  best.value = -1.0;
  for (std::size_t restart = 0; restart < cfg.restarts; ++restart) {
    std::vector<double> x0;
    if (restart == 0) {
      std::vector<ComplexVector> alice;
      for (std::size_t k = 0; k < kAliceStates; ++k) alice.push_back(PureState::basis({kAliceDim}, k).amplitudes());
      const std::vector<double> probs(kAliceStates, 1.0 / kAliceStates);
      x0 = encode(alice, probs, PureState::basis({kBobDim}, 0).amplitudes());
    } else {
      Rng rng = stream_rng(cfg.seed, restart);
      std::vector<ComplexVector> alice;
      for (std::size_t k = 0; k < kAliceStates; ++k) alice.push_back(haar_pure_state({kAliceDim}, rng).amplitudes());
      const auto probs = dirichlet_uniform(kAliceStates, rng);
      const auto bob = haar_pure_state({kBobDim}, rng).amplitudes();
      x0 = encode(alice, probs, bob);
    }
    cache.x.clear();
    const auto result = coordinate_ascent(objective, std::move(x0), options);
    if (result.value > best.value) {
      const Decoded d = decode(result.x);
      best.value = result.value;
      best.alice_probs = d.probs;
      best.alice_states = d.alice;
      best.bob_state = d.bob;
      best.restart = restart;
    }
  }
  return best;
}

double remote_dc_rate(NoiseParameter noise) {
  const KrausChannel phi = phi_p(noise.value());
  const KrausChannel ideal = psi_id();
  // Register order: A (4), B (2) into phi_p; A' (2), B' (2) into psi_id.
  // Prepared as A (x) A' (x) BB' with BB' = |Psi+>.
  const std::array<std::size_t, 4> to_channel_order{0, 2, 1, 3};
  std::vector<DensityOperator> signals;
  for (std::size_t i = 0; i < 4; ++i) {
    const PureState prepared =
        tensor(tensor(PureState::basis({4}, i), PureState::basis({2}, 0)), psi_plus());
    DensityOperator rho = permute_systems(prepared, to_channel_order).density();
    rho = apply_on(phi, rho, 0);
    rho = apply_on(ideal, rho, 2);
    signals.push_back(std::move(rho));
  }
  const std::vector<double> probs(4, 0.25);
  return holevo_quantity(probs, signals);
}

double dense_coding_rate() {
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const PureState bell = psi_plus();
  std::vector<DensityOperator> signals;
  for (std::size_t i = 0; i < 4; ++i) {
    ComplexVector v = tensor(pauli(i), id2) * bell.amplitudes();
    signals.push_back(PureState(std::move(v), {2, 2}).density());
  }
  const std::vector<double> probs(4, 0.25);
  return holevo_quantity(probs, signals);
}

EntropyMaxReport entropy_max_check(NoiseParameter noise, std::size_t trials, std::uint64_t seed,
                                   std::size_t directions) {
  const double p = noise.value();
  if (p == 0.0) {
    throw InvalidArgument("entropy_max_check: p = 0 gives a rank-deficient reference state");
  }
  const KrausChannel ch = phi_p(p);
  const DensityOperator mixed = DensityOperator::maximally_mixed({4});

  EntropyMaxReport report;
  report.trials = trials;
  {
    const DensityOperator v0 = PureState::basis({2}, 0).density();
    report.reference_entropy = von_neumann_entropy(apply(ch, tensor(mixed, v0)));
  }

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = stream_rng(seed, t);
    // Alternate full-rank and pure Alice inputs.
    const DensityOperator rho = (t % 2 == 0) ? random_density({4}, rng) : haar_pure_state({4}, rng).density();
    const DensityOperator v = haar_pure_state({2}, rng).density();
    const double s = von_neumann_entropy(apply(ch, tensor(rho, v)));
    const double reference = von_neumann_entropy(apply(ch, tensor(mixed, v)));
    report.max_violation = std::max(report.max_violation, s - reference);
  }

  for (std::size_t k = 0; k < directions; ++k) {
    Rng rng = stream_rng(seed, trials + k);
    const DensityOperator v = haar_pure_state({2}, rng).density();
    const ComplexMatrix direction = random_traceless_hermitian(4, rng);
    const DensityOperator at = apply(ch, tensor(mixed, v));
    const ComplexMatrix delta = qmac::apply(ch, tensor(direction, v.matrix()));
    const double derivative = entropy_directional_derivative(at, delta);
    report.max_abs_derivative = std::max(report.max_abs_derivative, std::abs(derivative));
  }

  report.pass = report.max_violation <= 1e-9 && report.max_abs_derivative < 1e-7;
  return report;
}

MinOutputReport min_output_entropy_scan(NoiseParameter noise, std::size_t trials, std::uint64_t seed) {
  const double p = noise.value();
  const KrausChannel ch = phi_p(p);

  MinOutputReport report;
  report.trials = trials;
  report.bound = min_output_bound(p);
  report.min_entropy = std::numeric_limits<double>::infinity();

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = stream_rng(seed, t);
    const double s = von_neumann_entropy(apply(ch, haar_pure_state({4, 2}, rng)));
    report.min_entropy = std::min(report.min_entropy, s);
    report.max_violation = std::max(report.max_violation, report.bound - s);
  }

  for (std::size_t i = 0; i < 4; ++i) {
    Rng rng = stream_rng(seed, trials + i);
    const PureState input = tensor(PureState::basis({4}, i), haar_pure_state({2}, rng));
    const double s = von_neumann_entropy(apply(ch, input));
    report.min_entropy = std::min(report.min_entropy, s);
    report.max_equality_defect = std::max(report.max_equality_defect, std::abs(s - report.bound));
  }

  report.pass = report.max_violation <= 1e-9 && report.max_equality_defect <= 1e-12;
  return report;
}

}  // namespace qmac
