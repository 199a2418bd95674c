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

#include <array>
#include <cmath>
#include <vector>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "qmac/channels.hpp"
#include "qmac/error.hpp"
#include "qmac/random.hpp"

using namespace qmac;
using Catch::Matchers::WithinAbs;

namespace {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

const std::vector<double> kGrid{0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0};

std::vector<double> spectrum(const ComplexMatrix& m) { return hermitian_eigenvalues(m); }

}  // namespace

TEST_CASE("Kraus channels validate shapes and trace preservation") {
  CHECK_THROWS_AS(KrausChannel({}, {2}, {2}), DimensionError);
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix::Identity(2, 2)}, {3}, {2}), DimensionError);
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix::Identity(2, 2) * 0.9}, {2}, {2}), InvalidArgument);
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix::Identity(2, 2)}, {}, {2}), DimensionError);

  const auto ch = identity_channel({2});
  CHECK_THROWS_AS(apply(ch, DensityOperator::maximally_mixed({3})), DimensionError);
  CHECK_THROWS_AS(qmac::apply(ch, ComplexMatrix::Identity(3, 3)), DimensionError);
  CHECK_THROWS_AS(apply(ch, PureState::basis({4}, 0)), DimensionError);
  CHECK_THROWS_AS(compose(identity_channel({3}), ch), DimensionError);
  CHECK_THROWS_AS(apply_on(ch, DensityOperator::maximally_mixed({3, 3}), 0), DimensionError);
  CHECK_THROWS_AS(apply_on(ch, DensityOperator::maximally_mixed({2}), 1), DimensionError);
}

TEST_CASE("identity channel leaves states unchanged") {
  Rng rng = stream_rng(1, 0);
  const auto ch = identity_channel({2, 3});
  const auto rho = random_density({2, 3}, rng);
  CHECK(max_abs_diff(apply(ch, rho).matrix(), rho.matrix()) < 1e-15);
}

TEST_CASE("depolarizing channel acts as (1-p) rho + p I/d") {
  Rng rng = stream_rng(2, 0);
  for (std::size_t d : {2, 3, 4}) {
    for (double p : kGrid) {
      const auto ch = depolarizing(d, p);
      CHECK(trace_preservation_defect(ch) < 1e-12);
      const auto rho = random_density({d}, rng);
      const auto di = static_cast<Eigen::Index>(d);
      const ComplexMatrix expected =
          (1.0 - p) * rho.matrix() + p * ComplexMatrix::Identity(di, di) / static_cast<double>(d);
      CHECK(max_abs_diff(apply(ch, rho).matrix(), expected) < 1e-14);
    }
  }
  CHECK(depolarizing(4, 0.0).kraus().size() == 1);
  CHECK_THROWS_AS(depolarizing(2, 1.5), InvalidArgument);
  CHECK_THROWS_AS(depolarizing(2, -0.1), InvalidArgument);
}

TEST_CASE("full depolarization maps any pure state to the maximally mixed state") {
  const auto out = apply(depolarizing(2, 1.0), PureState::basis({2}, 0));
  CHECK(max_abs_diff(out.matrix(), ComplexMatrix::Identity(2, 2) / 2.0) < 1e-15);
  Rng rng = stream_rng(3, 0);
  const auto eigs = spectrum(apply(depolarizing(4, 1.0), haar_pure_state({4}, rng)).matrix());
  for (double x : eigs) CHECK_THAT(x, WithinAbs(0.25, 1e-14));
}

TEST_CASE("depolarized pure ququart has entropy H(1-3p/4, p/4, p/4, p/4)") {
  Rng rng = stream_rng(4, 0);
  for (double p : kGrid) {
    const double expected = shannon_entropy(std::vector<double>{1.0 - 0.75 * p, p / 4, p / 4, p / 4});
    const auto out = apply(depolarizing(4, p), haar_pure_state({4}, rng));
    CHECK_THAT(von_neumann_entropy(out), WithinAbs(expected, 1e-12));
  }
}

TEST_CASE("controlled-Pauli unitary matches its entry-wise definition") {
  const ComplexMatrix u = controlled_pauli_unitary();
  CHECK(max_abs_diff(u, oracle::controlled_pauli_entries()) == 0.0);
  ComplexMatrix sum = ComplexMatrix::Zero(8, 8);
  for (std::size_t i = 0; i < 4; ++i) sum += tensor(basis_projector(4, i), pauli(i));
  CHECK(max_abs_diff(u, sum) == 0.0);
  CHECK(max_abs_diff(u.block(0, 0, 2, 2), pauli(0)) == 0.0);
  CHECK(max_abs_diff(u.adjoint() * u, ComplexMatrix::Identity(8, 8)) < 1e-12);
}

TEST_CASE("controlled-Pauli unitary on basis inputs") {
  Rng rng = stream_rng(5, 0);
  const ComplexMatrix u = controlled_pauli_unitary();
  const auto v = haar_pure_state({2}, rng);
  const auto in0 = tensor(PureState::basis({4}, 0), v);
  CHECK((u * in0.amplitudes() - in0.amplitudes()).norm() < 1e-15);
  const auto in1 = tensor(PureState::basis({4}, 1), PureState::basis({2}, 0));
  const auto out1 = tensor(PureState::basis({4}, 1), PureState::basis({2}, 1));
  CHECK((u * in1.amplitudes() - out1.amplitudes()).norm() < 1e-15);
}

TEST_CASE("tensor_channels of identities is the identity") {
  Rng rng = stream_rng(6, 0);
  const auto ch = tensor_channels(identity_channel({2}), identity_channel({3}));
  CHECK(ch.in_dims() == Dims{2, 3});
  const auto rho = random_density({2, 3}, rng);
  CHECK(max_abs_diff(apply(ch, rho).matrix(), rho.matrix()) < 1e-15);
}

TEST_CASE("tensor_channels acts factor-wise on product inputs") {
  Rng rng = stream_rng(7, 0);
  const auto phi = phi_p(1.0);
  const auto ideal = psi_id();
  const auto both = tensor_channels(phi, ideal);
  CHECK(both.in_dims() == Dims{4, 2, 2, 2});
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = random_density({4, 2}, rng);
    const auto y = random_density({2, 2}, rng);
    const auto out = apply(both, tensor(x, y));
    const auto expected = tensor(apply(phi, x), apply(ideal, y));
    CHECK(max_abs_diff(out.matrix(), expected.matrix()) < 1e-14);
  }
}

TEST_CASE("per-copy application matches the tensor-product channel on two-use protocol inputs") {
  const double p = 0.37;
  const auto phi = phi_p(p);
  const auto both = tensor_channels(phi, phi);
  const std::array<std::size_t, 4> order{0, 2, 1, 3};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const auto prepared = tensor(tensor(PureState::basis({4}, i), PureState::basis({4}, j)), psi_plus());
      const auto rho = permute_systems(prepared, order).density();
      const auto direct = apply(both, rho);
      const auto staged = apply_on(phi, apply_on(phi, rho, 0), 2);
      CHECK(max_abs_diff(direct.matrix(), staged.matrix()) < 1e-13);
    }
  }
}

TEST_CASE("apply_on agrees with padding the channel by identities") {
  Rng rng = stream_rng(8, 0);
  const auto dep = depolarizing(3, 0.4);
  const auto rho = random_density({2, 3, 2}, rng);
  const auto padded = tensor_channels(tensor_channels(identity_channel({2}), dep), identity_channel({2}));
  CHECK(max_abs_diff(apply_on(dep, rho, 1).matrix(), apply(padded, rho).matrix()) < 1e-14);
  const auto g = gamma_p(0.3);
  const auto big = random_density({3, 2, 4, 2}, rng);
  const auto padded_g = tensor_channels(identity_channel({3}), g);
  const auto local = apply_on(g, big, 1);
  CHECK(local.dims() == Dims{3, 2, 2});
  CHECK(max_abs_diff(local.matrix(), apply(padded_g, big).matrix()) < 1e-14);
}

TEST_CASE("pure-state application agrees with density application") {
  Rng rng = stream_rng(9, 0);
  for (double p : kGrid) {
    const auto ch = phi_p(p);
    const auto psi = haar_pure_state({4, 2}, rng);
    CHECK(max_abs_diff(apply(ch, psi).matrix(), apply(ch, psi.density()).matrix()) < 1e-14);
  }
}

TEST_CASE("composition with the identity is neutral") {
  Rng rng = stream_rng(10, 0);
  const auto ch = phi_p(0.3);
  const auto rho = random_density({4, 2}, rng);
  const auto left = compose(identity_channel({4, 2}), ch);
  const auto right = compose(ch, identity_channel({4, 2}));
  CHECK(max_abs_diff(apply(left, rho).matrix(), apply(ch, rho).matrix()) < 1e-14);
  CHECK(max_abs_diff(apply(right, rho).matrix(), apply(ch, rho).matrix()) < 1e-14);
}

TEST_CASE("phi_p equals depolarization after controlled-Pauli conjugation") {
  Rng rng = stream_rng(11, 0);
  for (double p : kGrid) {
    const auto built = compose(tensor_channels(depolarizing(4, p), identity_channel({2})),
                               unitary_channel(controlled_pauli_unitary(), {4, 2}));
    const auto ch = phi_p(p);
    for (int trial = 0; trial < 50; ++trial) {
      const auto rho = random_density({4, 2}, rng);
      CHECK(max_abs_diff(apply(built, rho).matrix(), apply(ch, rho).matrix()) < 1e-12);
    }
  }
}

TEST_CASE("phi_p matches its closed-form action on random inputs") {
  Rng rng = stream_rng(12, 0);
  for (double p : kGrid) {
    const auto ch = phi_p(p);
    const auto ch0 = phi_p(0.0);
    const std::array<std::size_t, 1> keep_b{1};
    for (int trial = 0; trial < 100; ++trial) {
      const auto rho = random_density({4, 2}, rng);
      const auto out = apply(ch, rho).matrix();
      CHECK(max_abs_diff(out, oracle::phi_action(p, rho.matrix())) < 1e-12);
      // (1-p) Phi^0(rho) + p I/4 (x) Tr_A[U rho U^+]
      const auto unitary_part = apply(ch0, rho);
      const ComplexMatrix mixed = tensor(ComplexMatrix::Identity(4, 4) / 4.0,
                                         partial_trace(unitary_part, keep_b).matrix());
      CHECK(max_abs_diff(out, (1.0 - p) * unitary_part.matrix() + p * mixed) < 1e-12);
    }
  }
}

TEST_CASE("phi_p on its Methods test directions") {
  Rng rng = stream_rng(13, 0);
  for (double p : kGrid) {
    const auto ch = phi_p(p);
    const auto v = haar_pure_state({2}, rng).density().matrix();
    const auto delta = random_traceless_hermitian(4, rng);
    const ComplexMatrix x = tensor(delta, v);
    CHECK(max_abs_diff(qmac::apply(ch, x), oracle::phi_action(p, x)) < 1e-12);
  }
}

TEST_CASE("phi_p without noise routes the Pauli index into Bob's qubit") {
  Rng rng = stream_rng(14, 0);
  const auto ch = phi_p(0.0);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto v = haar_pure_state({2}, rng).density().matrix();
    const auto out = qmac::apply(ch, tensor(basis_projector(4, i), v));
    const ComplexMatrix expected = tensor(basis_projector(4, i), pauli(i) * v * pauli(i).adjoint());
    CHECK(max_abs_diff(out, expected) < 1e-14);
  }
}

TEST_CASE("phi_p with full noise erases Alice's register") {
  Rng rng = stream_rng(15, 0);
  const auto ch = phi_p(1.0);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto v = haar_pure_state({2}, rng).density().matrix();
    const auto out = qmac::apply(ch, tensor(basis_projector(4, i), v));
    const ComplexMatrix expected = tensor(ComplexMatrix::Identity(4, 4) / 4.0, pauli(i) * v * pauli(i).adjoint());
    CHECK(max_abs_diff(out, expected) < 1e-14);
  }
}

TEST_CASE("phi_p minimal-entropy signal spectrum") {
  for (double p : kGrid) {
    const auto out = apply(phi_p(p), tensor(PureState::basis({4}, 0), PureState::basis({2}, 0)));
    const auto eigs = spectrum(out.matrix());
    const std::vector<double> expected{1.0 - 0.75 * p, p / 4, p / 4, p / 4, 0, 0, 0, 0};
    auto sorted = expected;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (std::size_t k = 0; k < 8; ++k) CHECK_THAT(eigs[k], WithinAbs(sorted[k], 1e-14));
  }
}

TEST_CASE("phi_p of the maximally mixed Alice input has a two-level spectrum") {
  Rng rng = stream_rng(16, 0);
  for (double p : kGrid) {
    const auto v = haar_pure_state({2}, rng).density();
    const auto out = apply(phi_p(p), tensor(DensityOperator::maximally_mixed({4}), v));
    const auto eigs = spectrum(out.matrix());
    const double hi = std::max((2.0 - p) / 8.0, p / 8.0);
    const double lo = std::min((2.0 - p) / 8.0, p / 8.0);
    for (std::size_t k = 0; k < 4; ++k) CHECK_THAT(eigs[k], WithinAbs(hi, 1e-14));
    for (std::size_t k = 4; k < 8; ++k) CHECK_THAT(eigs[k], WithinAbs(lo, 1e-14));
  }
  CHECK_THROWS_AS(phi_p(1.01), InvalidArgument);
}

TEST_CASE("psi_id transmits both qubits ideally") {
  Rng rng = stream_rng(17, 0);
  const auto ch = psi_id();
  CHECK(ch.in_dims() == Dims{2, 2});
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = random_density({2, 2}, rng);
    const auto out = apply(ch, rho);
    CHECK(max_abs_diff(out.matrix(), rho.matrix()) < 1e-15);
    CHECK_THAT(von_neumann_entropy(out), WithinAbs(von_neumann_entropy(rho), 1e-12));
  }
}

TEST_CASE("gamma_p shapes and branch actions") {
  Rng rng = stream_rng(18, 0);
  CHECK(gamma_p(0.5).in_dims() == Dims{2, 4, 2});
  CHECK(gamma_p(0.5).out_dims() == Dims{2, 2});
  for (std::size_t j = 0; j < 4; ++j) {
    const auto psi1 = haar_pure_state({2}, rng).density().matrix();
    const auto psi2 = haar_pure_state({2}, rng).density().matrix();
    const ComplexMatrix in = tensor(tensor(psi1, basis_projector(4, j)), psi2);
    const ComplexMatrix up = tensor(pauli(j) * psi1 * pauli(j).adjoint(), psi2);
    const ComplexMatrix down = tensor(psi1, pauli(j) * psi2 * pauli(j).adjoint());
    CHECK(max_abs_diff(qmac::apply(gamma_p(0.0), in), up) < 1e-14);
    CHECK(max_abs_diff(qmac::apply(gamma_p(1.0), in), down) < 1e-14);
  }
  CHECK_THROWS_AS(gamma_p(-0.5), InvalidArgument);
}

TEST_CASE("gamma_p at p = 1/2 on |0>, e_1, |0>") {
  const auto in = tensor(tensor(PureState::basis({2}, 0), PureState::basis({4}, 1)), PureState::basis({2}, 0));
  const auto out = apply(gamma_p(0.5), in);
  const ComplexMatrix expected =
      0.5 * (tensor(basis_projector(2, 1), basis_projector(2, 0)) + tensor(basis_projector(2, 0), basis_projector(2, 1)));
  CHECK(max_abs_diff(out.matrix(), expected) < 1e-15);
}

TEST_CASE("gamma_p matches the explicit two-branch construction") {
  Rng rng = stream_rng(19, 0);
  for (double p : kGrid) {
    const auto ch = gamma_p(p);
    for (int trial = 0; trial < 20; ++trial) {
      const auto rho = random_density({2, 4, 2}, rng);
      CHECK(max_abs_diff(apply(ch, rho).matrix(), oracle::gamma_action(p, rho.matrix())) < 1e-13);
    }
  }
}

TEST_CASE("gamma_p is blind to coherences of B in the standard basis") {
  Rng rng = stream_rng(20, 0);
  for (double p : kGrid) {
    const auto ch = gamma_p(p);
    for (int trial = 0; trial < 20; ++trial) {
      const auto rho = random_density({2, 4, 2}, rng);
      const auto dephased = apply_on(dephasing(4), rho, 1);
      CHECK(max_abs_diff(apply(ch, rho).matrix(), apply(ch, dephased).matrix()) < 1e-12);
    }
  }
}

TEST_CASE("every constructor yields a CPTP map that keeps states valid") {
  Rng rng = stream_rng(21, 0);
  std::vector<KrausChannel> channels{identity_channel({2}), identity_channel({2, 3}), psi_id(), dephasing(4),
                                     unitary_channel(controlled_pauli_unitary(), {4, 2})};
  for (double p : kGrid) {
    channels.push_back(depolarizing(2, p));
    channels.push_back(depolarizing(4, p));
    channels.push_back(phi_p(p));
    channels.push_back(gamma_p(p));
  }
  channels.push_back(tensor_channels(phi_p(0.5), psi_id()));
  for (const auto& ch : channels) {
    CHECK(trace_preservation_defect(ch) < 1e-10);
    for (int trial = 0; trial < 100; ++trial) {
      const auto rho = trial % 2 == 0 ? random_density(ch.in_dims(), rng) : haar_pure_state(ch.in_dims(), rng).density();
      const auto out = apply(ch, rho);
      CHECK_NOTHROW(DensityOperator(out.matrix(), out.dims()));
    }
  }
}
