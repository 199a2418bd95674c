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

// Classical multiple-access channels: capacity-region constraints,
// additivity under channel products, Blahut-Arimoto, and the classical
// reduction used to bound the B-rate of gamma_p.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmac/infoq.hpp"
#include "qmac/random.hpp"
#include "qmac/regions.hpp"

namespace qmac {

/// p(y | x_1, ..., x_n). Rows are indexed by the input tuple in mixed radix
/// with sender 0 most significant.
class ClassicalMac {
 public:
  /// table has prod(input_sizes) rows of output_size entries, flattened.
  /// Throws InvalidArgument unless every row is a distribution within 1e-9.
  ClassicalMac(std::vector<std::size_t> input_sizes, std::size_t output_size, std::vector<double> table);

  const std::vector<std::size_t>& input_sizes() const { return input_sizes_; }
  std::size_t senders() const { return input_sizes_.size(); }
  std::size_t output_size() const { return output_size_; }
  std::size_t input_count() const { return table_.size() / output_size_; }
  const std::vector<double>& table() const { return table_; }

  std::span<const double> row(std::size_t input_index) const {
    return {table_.data() + input_index * output_size_, output_size_};
  }
  double prob(std::size_t input_index, std::size_t y) const {
    return table_[input_index * output_size_ + y];
  }

 private:
  std::vector<std::size_t> input_sizes_;
  std::size_t output_size_;
  std::vector<double> table_;
};

/// One independent input law per sender.
struct SenderDistributions {
  std::vector<std::vector<double>> per_sender;
};

/// R(S) <= I(X(S) : Y | X(S^c)) for the sender set encoded in `senders`
/// (bit i = sender i).
struct SubsetBound {
  std::uint32_t senders = 0;
  double information = 0.0;
};

/// I(X_S : Y | X_{S^c}) for a joint input law over variables of the given
/// sizes (mixed radix, variable 0 most significant) feeding `rows`.
double conditional_information(std::span<const std::size_t> var_sizes, std::span<const double> joint,
                               const ClassicalMac& ch, std::uint32_t subset);

/// All 2^n - 1 subset constraints for product-form inputs.
std::vector<SubsetBound> mac_region(const ClassicalMac& ch, const SenderDistributions& dist);

/// Two-sender constraints as halfspaces in (R_1, R_2).
std::vector<Halfspace> to_halfspaces(std::span<const SubsetBound> bounds);
RateRegion2D mac_region_2d(const ClassicalMac& ch, const SenderDistributions& dist);

/// Two uses side by side. Sender i controls the pair (x_{i,1}, x_{i,2})
/// encoded as x_{i,1} * |X_{i,2}| + x_{i,2}; the output is (y_1, y_2)
/// encoded as y_1 * |Y_2| + y_2.
ClassicalMac product_mac(const ClassicalMac& c1, const ClassicalMac& c2);

struct CheckReport {
  std::string check;
  std::size_t trials = 0;
  double max_violation = 0.0;
  bool pass = false;
};
nlohmann::json to_json(const CheckReport& report);

/// For random per-sender joint laws over (x_{i,1}, x_{i,2}) (correlated
/// across the two uses, independent across senders) checks
///   I(X(S):Y|X(S^c)) <= I(X(S_1):Y_1|X(S_1^c)) + I(X(S_2):Y_2|X(S_2^c))
/// for every nonempty S = S_1 u S_2. Passes when the largest excess is
/// at most 1e-9.
CheckReport additivity_check(const ClassicalMac& c1, const ClassicalMac& c2, std::size_t trials,
                             std::uint64_t seed);

/// additivity_check over `pairs` random channel pairs drawn from stream k
/// of `seed`: one or two senders, input and output alphabets in {2, 3, 4},
/// rows from Dirichlet(1), `inputs_per_pair` random input laws per pair.
CheckReport additivity_sweep(std::size_t pairs, std::uint64_t seed, std::size_t inputs_per_pair = 1);

struct ClassicalSamplingConfig {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
};

/// Hull of the pentagons for every pair of uniform-prefix input laws and
/// cfg.samples Dirichlet(1) pairs. Two senders only.
RateRegion2D sampled_mac_region(const ClassicalMac& ch, const ClassicalSamplingConfig& cfg);

struct AdditivityDemo {
  RateRegion2D sum_region;
  RateRegion2D product_region;
  double hausdorff = 0.0;
  bool product_within_sum = false;  // within `tolerance`
  bool sum_within_product = false;
};

AdditivityDemo region_additivity_demo(const ClassicalMac& c1, const ClassicalMac& c2,
                                      const ClassicalSamplingConfig& cfg, double tolerance = 1e-3);

struct BlahutArimotoResult {
  double capacity = 0.0;     // certified lower bound at exit
  double upper_bound = 0.0;  // max_x D(W(.|x) || q)
  std::vector<double> input;
  std::size_t iterations = 0;
};

/// Capacity of a single-sender channel; stops when the two-sided bound gap
/// drops below 1e-10 or after 1e5 iterations.
BlahutArimotoResult blahut_arimoto(const ClassicalMac& ch);

/// B -> B_2 marginal of the classical reduction of gamma_p on {0,1,2,3}:
/// 0 -> 0; i != 0 -> i with probability p, 0 with probability 1 - p.
ClassicalMac lambda2_channel(NoiseParameter p);

/// max_{p(B)} I(B : B_2) + 1, an n-use bound on the B-rate of gamma_p.
double gamma_rb_bound(NoiseParameter p);

struct GammaSingleCopyOptimum {
  double value = 0.0;
  std::vector<double> b_probs;
  ComplexVector a1_state;
  ComplexVector a2_state;
  std::size_t restart = 0;
};

/// Best single-use B-rate through gamma_p with A1 and A2 sending fixed pure
/// qubit states and B sending computational basis states. Restart 0 starts
/// from A1 = A2 = |0> with B uniform on {|0>, |1>}.
GammaSingleCopyOptimum gamma_single_copy_rb(NoiseParameter p, const SearchConfig& cfg);

/// B-rate when A1 and A2 each share |Psi+> with a qubit sent through the
/// ideal channel and B sends uniform basis states through gamma_p.
double gamma_entangled_rb(NoiseParameter p);

// Example channels.
ClassicalMac binary_symmetric_channel(double crossover);
ClassicalMac binary_erasure_channel(double erasure);
/// Noiseless channel on one sender with the given alphabet.
ClassicalMac noiseless_channel(std::size_t alphabet);
/// Two senders, each through its own BSC; output is the pair (y_1, y_2).
ClassicalMac parallel_bsc_mac(double crossover1, double crossover2);
/// y = x_1 xor x_2 on bits.
ClassicalMac xor_mac();
/// Output always 0, regardless of the inputs.
ClassicalMac constant_mac(std::vector<std::size_t> input_sizes);
/// Rows drawn from Dirichlet(1).
ClassicalMac random_mac(std::vector<std::size_t> input_sizes, std::size_t output_size, Rng& rng);

/// Crossover q in [0, 1/2] with H(q) = h.
double binary_entropy_inverse(double h);

/// {"input_sizes": [...], "output_size": m, "table": nested lists}, where
/// table[x_1]...[x_n] is the output distribution.
nlohmann::json mac_to_json(const ClassicalMac& ch);
ClassicalMac mac_from_json(const nlohmann::json& j);

}  // namespace qmac
