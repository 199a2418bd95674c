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

// Holevo quantities and the rate bounds of the controlled-Pauli channel
// family. All values are in bits; two-use quantities are reported per use.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qmac/channels.hpp"
#include "qmac/hilbert.hpp"

namespace qmac {

/// Noise level p in [0, 1]; validated on construction.
class NoiseParameter {
 public:
  explicit NoiseParameter(double p);
  double value() const { return p_; }

 private:
  double p_;
};

/// A sender's code alphabet: probabilities paired with input states.
class Ensemble {
 public:
  Ensemble(std::vector<double> probs, std::vector<DensityOperator> states);

  static Ensemble uniform(std::vector<DensityOperator> states);
  /// Uniform over the first `count` computational basis states of dims.
  static Ensemble uniform_basis(const Dims& dims, std::size_t count);

  const std::vector<double>& probs() const { return probs_; }
  const std::vector<DensityOperator>& states() const { return states_; }
  const Dims& dims() const { return states_.front().dims(); }
  std::size_t size() const { return probs_.size(); }

 private:
  std::vector<double> probs_;
  std::vector<DensityOperator> states_;
};

/// Conditional and joint Holevo informations of the cqc state built from
/// a two-sender channel and one ensemble per sender.
struct MacInfoTriple {
  double i_a_c_given_b = 0.0;
  double i_b_c_given_a = 0.0;
  double i_ab_c = 0.0;
};

/// S(sum p_i rho_i) - sum p_i S(rho_i) for already-prepared signal states.
double holevo_quantity(std::span<const double> probs, std::span<const DensityOperator> states);

/// Holevo quantity of the channel outputs of an ensemble.
double holevo_chi(const KrausChannel& ch, const Ensemble& ens);

/// I(A:C|B) = sum_j q_j chi({p_i, Phi(a_i (x) b_j)}), I(B:C|A) likewise, and
/// I(AB:C) = chi({p_i q_j, Phi(a_i (x) b_j)}). ch.in_dims() must be the
/// concatenation of the Alice and Bob ensemble dims.
MacInfoTriple mac_mutual_informations(const KrausChannel& ch, const Ensemble& alice,
                                      const Ensemble& bob);

/// Single-use Alice rate of phi_p:
/// H((2-p)/8 x4, p/8 x4) - H(1-3p/4, p/4, p/4, p/4).
double chi1_closed_form(NoiseParameter p);

/// Per-use Alice rate of the two-use protocol in which Bob shares |Psi+>
/// across both B-inputs and Alice sends independent uniform basis states.
double chi2_prime_closed_form(NoiseParameter p);

/// The same two-use rate computed by building the sixteen output states of
/// (phi_p (x) phi_p) and evaluating their Holevo quantity (halved).
double chi2_prime_protocol(NoiseParameter p);

/// chi2_prime_closed_form(p) - chi1_closed_form(p).
double superadditivity_gap(NoiseParameter p);

struct SearchConfig {
  std::size_t restarts = 200;
  std::uint64_t seed = 0;
  std::size_t iterations = 200;
};

struct Chi1Optimum {
  double value = 0.0;
  std::vector<double> alice_probs;
  std::vector<ComplexVector> alice_states;  // unit vectors in C^4
  ComplexVector bob_state;                  // unit vector in C^2
  std::size_t restart = 0;                  // index of the winning restart
};

/// Best single-use Alice Holevo rate of phi_p over four-state pure Alice
/// ensembles and pure Bob inputs. Restart 0 starts from the uniform
/// standard basis with Bob in |0>; restart k > 0 starts from Haar-random
/// states and a Dirichlet(1) distribution drawn from stream k of cfg.seed.
/// Ties go to the lowest restart index.
Chi1Optimum chi1_bruteforce(NoiseParameter p, const SearchConfig& cfg);

/// Alice rate for phi_p (x) psi_id when Bob feeds the two halves of |Psi+>
/// into the B-inputs of both channels and Alice sends uniform |i>.
double remote_dc_rate(NoiseParameter p);

/// Holevo quantity of the four Bell states (sigma_i (x) I)|Psi+>.
double dense_coding_rate();

struct EntropyMaxReport {
  std::size_t trials = 0;
  double reference_entropy = 0.0;  // S(phi_p(I/4 (x) v))
  double max_violation = 0.0;      // max(0, S(phi_p(rho (x) v)) - reference)
  double max_abs_derivative = 0.0; // over random traceless directions at I/4
  bool pass = false;
};

/// Checks that I/4 maximizes S(phi_p(rho (x) v)) over random Alice states
/// and that the entropy derivative at I/4 vanishes along `directions`
/// random traceless directions. Requires p in (0, 1].
EntropyMaxReport entropy_max_check(NoiseParameter p, std::size_t trials, std::uint64_t seed,
                                   std::size_t directions = 20);

struct MinOutputReport {
  std::size_t trials = 0;
  double bound = 0.0;              // H(1-3p/4, p/4, p/4, p/4)
  double min_entropy = 0.0;        // smallest output entropy seen
  double max_violation = 0.0;      // max(0, bound - S)
  double max_equality_defect = 0.0;// max |S(phi_p(|i>|v>)) - bound|
  bool pass = false;
};

/// Scans Haar-random pure inputs on C^4 (x) C^2 and the product inputs |i>|v>.
MinOutputReport min_output_entropy_scan(NoiseParameter p, std::size_t trials, std::uint64_t seed);

}  // namespace qmac
