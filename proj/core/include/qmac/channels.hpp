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

#pragma once

#include <cstddef>
#include <vector>

#include "qmac/hilbert.hpp"

namespace qmac {

inline constexpr double kTracePreservationTol = 1e-10;

/// CPTP map given by Kraus operators K_k (out_dim x in_dim) with
/// sum_k K_k^+ K_k = I.
class KrausChannel {
 public:
  /// Throws DimensionError on shape mismatch and InvalidArgument when the
  /// operators are not trace preserving within kTracePreservationTol.
  KrausChannel(std::vector<ComplexMatrix> kraus, Dims in_dims, Dims out_dims);

  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const Dims& in_dims() const { return in_dims_; }
  const Dims& out_dims() const { return out_dims_; }
  std::size_t in_dim() const { return product(in_dims_); }
  std::size_t out_dim() const { return product(out_dims_); }
  /// The Kraus operators stacked vertically, K_0 on top.
  const ComplexMatrix& stacked() const { return stacked_; }

 private:
  std::vector<ComplexMatrix> kraus_;
  ComplexMatrix stacked_;
  Dims in_dims_;
  Dims out_dims_;
};

/// max |sum K^+K - I|.
double trace_preservation_defect(const KrausChannel& ch);

/// sum_k K rho K^+. rho.dims() must equal ch.in_dims().
DensityOperator apply(const KrausChannel& ch, const DensityOperator& rho);

/// Output for a pure input, sum_k (K psi)(K psi)^+.
DensityOperator apply(const KrausChannel& ch, const PureState& psi);

/// Same map on an arbitrary operator (e.g. a traceless direction).
ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& x);

/// Applies ch to the contiguous factors [first, first + ch.in_dims().size())
/// of rho, identity elsewhere. Those factors are replaced by ch.out_dims().
DensityOperator apply_on(const KrausChannel& ch, const DensityOperator& rho, std::size_t first);

KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b);

/// after o before.
KrausChannel compose(const KrausChannel& after, const KrausChannel& before);

KrausChannel identity_channel(Dims dims);

/// rho -> U rho U^+.
KrausChannel unitary_channel(const ComplexMatrix& u, Dims dims);

/// Complete measurement in the computational basis of C^dim.
KrausChannel dephasing(std::size_t dim);

/// rho -> (1-p) rho + p I/d, realized with the discrete Weyl operators
/// X^a Z^b: weight sqrt(1 - p + p/d^2) on the identity, sqrt(p)/d on the rest.
KrausChannel depolarizing(std::size_t dim, double p);

/// U = sum_i |i><i| (x) sigma_i on C^4 (x) C^2, sigma = (I, X, Y, Z).
ComplexMatrix controlled_pauli_unitary();

/// Two-sender channel: Alice C^4, Bob C^2, output C^4 (x) C^2.
/// Phi^p = (D_p on the 4-level factor (x) id_2) o Ad_U, so that
/// Phi^p(rho) = (1-p) U rho U^+ + p I/4 (x) Tr_A[U rho U^+].
///
/// The circuit drawing of this channel admits more than one reading of
/// where the depolarizing box sits; the closed-form action above is the
/// one implemented.
KrausChannel phi_p(double p);

/// Noiseless transmission of one qubit from each sender (C^2 (x) C^2).
KrausChannel psi_id();

/// Three-sender channel on A1 (C^2) (x) B (C^4) (x) A2 (C^2) -> A1 (x) A2.
/// With probability 1-p applies sum_j sigma_j (x) |j><j| (x) I, with
/// probability p applies sum_j I (x) |j><j| (x) sigma_j, then discards B.
KrausChannel gamma_p(double p);

}  // namespace qmac
