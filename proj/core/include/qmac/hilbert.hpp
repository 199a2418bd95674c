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

// Dense linear algebra and entropy primitives for small multipartite
// Hilbert spaces. Every space handled here has total dimension <= 64, so
// all operators are stored densely.
//
// Subsystem ordering: factors are listed left to right, with the leftmost
// factor carrying the most significant index (Kronecker convention). When
// several channel copies act on one register, each copy contributes its
// (A-input, B-input) factors in that order, copies left to right.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qmac {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Dims = std::vector<std::size_t>;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kNegativeEigenTol = 1e-10;
// Eigenvalues below this are dropped before evaluating -x log x.
inline constexpr double kSpectrumClip = 1e-12;
inline constexpr double kNormTol = 1e-10;

std::size_t product(std::span<const std::size_t> dims);

/// Max absolute deviation of m from its adjoint; +inf for non-square input.
double hermiticity_defect(const ComplexMatrix& m);

/// Positive-semidefinite, Hermitian, unit-trace operator with a factor list.
class DensityOperator {
 public:
  /// Validates Hermiticity, trace and positivity (throws InvalidState).
  DensityOperator(ComplexMatrix matrix, Dims dims);

  /// Skips the spectral positivity check; Hermiticity and trace are still
  /// enforced. Used for outputs of CPTP maps, which are valid by construction.
  static DensityOperator trusted(ComplexMatrix matrix, Dims dims);

  /// I/d on the given factors.
  static DensityOperator maximally_mixed(Dims dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  const Dims& dims() const { return dims_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  struct TrustedTag {};
  DensityOperator(ComplexMatrix matrix, Dims dims, TrustedTag);

  ComplexMatrix matrix_;
  Dims dims_;
};

/// Unit-norm state vector with a factor list.
class PureState {
 public:
  PureState(ComplexVector amplitudes, Dims dims);

  /// |index> in the computational basis of the given factors.
  static PureState basis(Dims dims, std::size_t index);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const Dims& dims() const { return dims_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }

  DensityOperator density() const;

 private:
  ComplexVector amplitudes_;
  Dims dims_;
};

/// Pauli matrices indexed 0..3 as I, X, Y, Z.
ComplexMatrix pauli(std::size_t index);

/// |i><i| on C^dim.
ComplexMatrix basis_projector(std::size_t dim, std::size_t index);

/// (|00> + |11>)/sqrt(2).
PureState psi_plus();

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);
PureState tensor(const PureState& a, const PureState& b);

/// Reduced operator on the factors listed in keep (kept in their original
/// relative order). Works for any square operator, not only states, so it
/// also serves linear-map computations on traceless directions.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);
DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::size_t> keep);

/// Reorders factors so that output factor k is input factor perm[k].
ComplexMatrix permute_systems(const ComplexMatrix& m, std::span<const std::size_t> dims,
                              std::span<const std::size_t> perm);
DensityOperator permute_systems(const DensityOperator& rho, std::span<const std::size_t> perm);
PureState permute_systems(const PureState& psi, std::span<const std::size_t> perm);

/// Real spectrum in descending order. Throws InvalidArgument when the input
/// deviates from Hermitian by more than kHermitianTol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// -sum x log2 x over a spectrum; values in (-kNegativeEigenTol, kSpectrumClip)
/// are treated as zero, anything more negative throws InvalidState.
double entropy_of_spectrum(std::span<const double> spectrum);

double von_neumann_entropy(const DensityOperator& rho);

/// Entropy of a probability vector in bits. Entries may dip to -1e-12 and
/// the sum must be within 1e-9 of one; otherwise InvalidArgument.
double shannon_entropy(std::span<const double> probabilities);

/// d/dalpha S(rho + alpha delta) at alpha = 0, i.e. -Tr[delta log2 rho].
/// delta must be Hermitian and traceless. Throws Divergence when delta has
/// diagonal weight on the (numerical) kernel of rho.
double entropy_directional_derivative(const DensityOperator& rho, const ComplexMatrix& delta);

}  // namespace qmac
