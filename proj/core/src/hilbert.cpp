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

#include "qmac/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "qmac/error.hpp"

namespace qmac {
namespace {

std::string dims_to_string(std::span<const std::size_t> dims) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k) os << ',';
    os << dims[k];
  }
  os << ']';
  return os.str();
}

void require_dims_match(std::size_t dim, std::span<const std::size_t> dims) {
  if (dims.empty() || product(dims) != dim) {
    throw DimensionError("subsystem dims " + dims_to_string(dims) +
                         " do not multiply to " + std::to_string(dim));
  }
}

// Digits of a linear index in the mixed radix given by dims (factor 0 most
// significant).
std::vector<std::size_t> digits_of(std::size_t index, std::span<const std::size_t> dims) {
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
  return digits;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return (m + m.adjoint()) * 0.5;
}

}  // namespace

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// DensityOperator / PureState

DensityOperator::DensityOperator(ComplexMatrix matrix, Dims dims, TrustedTag)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (matrix_.rows() != matrix_.cols()) throw DimensionError("density operator must be square");
  require_dims_match(static_cast<std::size_t>(matrix_.rows()), dims_);
  if (hermiticity_defect(matrix_) > kHermitianTol) {
    throw InvalidState("density operator is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0, 0.0)) > kTraceTol) {
    throw InvalidState("density operator trace differs from 1");
  }
  matrix_ = hermitian_part(matrix_);
}

DensityOperator::DensityOperator(ComplexMatrix matrix, Dims dims)
    : DensityOperator(std::move(matrix), std::move(dims), TrustedTag{}) {
  const auto spectrum = hermitian_eigenvalues(matrix_);
  if (spectrum.back() < -kNegativeEigenTol) {
    throw InvalidState("density operator has a negative eigenvalue");
  }
}

DensityOperator DensityOperator::trusted(ComplexMatrix matrix, Dims dims) {
  return DensityOperator(std::move(matrix), std::move(dims), TrustedTag{});
}

DensityOperator DensityOperator::maximally_mixed(Dims dims) {
  const auto d = static_cast<Eigen::Index>(product(dims));
  return trusted(ComplexMatrix::Identity(d, d) / static_cast<double>(d), std::move(dims));
}

PureState::PureState(ComplexVector amplitudes, Dims dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  require_dims_match(static_cast<std::size_t>(amplitudes_.size()), dims_);
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTol) {
    throw InvalidState("pure state is not normalized");
  }
}

PureState PureState::basis(Dims dims, std::size_t index) {
  const auto d = product(dims);
  if (index >= d) throw InvalidArgument("basis index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v), std::move(dims));
}

DensityOperator PureState::density() const {
  return DensityOperator::trusted(amplitudes_ * amplitudes_.adjoint(), dims_);
}

// ---------------------------------------------------------------------------
// Named operators

ComplexMatrix pauli(std::size_t index) {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  switch (index) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw InvalidArgument("pauli index must be 0..3");
  }
  return m;
}

ComplexMatrix basis_projector(std::size_t dim, std::size_t index) {
  if (index >= dim) throw InvalidArgument("basis index out of range");
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
  return m;
}

PureState psi_plus() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return PureState(std::move(v), {2, 2});
}

// ---------------------------------------------------------------------------
// Tensor structure

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityOperator::trusted(tensor(a.matrix(), b.matrix()), std::move(dims));
}

PureState tensor(const PureState& a, const PureState& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  ComplexVector v = tensor(ComplexMatrix(a.amplitudes()), ComplexMatrix(b.amplitudes()));
  return PureState(std::move(v), std::move(dims));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  if (m.rows() != m.cols()) throw DimensionError("partial_trace needs a square operator");
  require_dims_match(static_cast<std::size_t>(m.rows()), dims);

  std::vector<bool> kept(dims.size(), false);
  for (auto k : keep) {
    if (k >= dims.size()) throw InvalidArgument("partial_trace index out of range");
    if (kept[k]) throw InvalidArgument("partial_trace index repeated");
    kept[k] = true;
  }

  Dims kept_dims;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (kept[k]) kept_dims.push_back(dims[k]);
  }
  const std::size_t out_dim = product(kept_dims);

  // Split every full index into (kept index, traced index).
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<std::size_t> kept_index(n), traced_index(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto digits = digits_of(i, dims);
    std::size_t ki = 0, ti = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (kept[k]) {
        ki = ki * dims[k] + digits[k];
      } else {
        ti = ti * dims[k] + digits[k];
      }
    }
    kept_index[i] = ki;
    traced_index[i] = ti;
  }

  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(out_dim),
                                          static_cast<Eigen::Index>(out_dim));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (traced_index[i] != traced_index[j]) continue;
      out(static_cast<Eigen::Index>(kept_index[i]), static_cast<Eigen::Index>(kept_index[j])) +=
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::size_t> keep) {
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  ComplexMatrix reduced = partial_trace(rho.matrix(), rho.dims(), sorted);
  Dims dims;
  for (auto k : sorted) dims.push_back(rho.dims()[k]);
  if (dims.empty()) dims.push_back(1);
  return DensityOperator::trusted(std::move(reduced), std::move(dims));
}

namespace {

// Maps input linear index -> output linear index for a factor permutation.
std::vector<std::size_t> permutation_map(std::span<const std::size_t> dims,
                                         std::span<const std::size_t> perm) {
  if (perm.size() != dims.size()) throw InvalidArgument("permutation has the wrong length");
  std::vector<bool> seen(dims.size(), false);
  for (auto p : perm) {
    if (p >= dims.size() || seen[p]) throw InvalidArgument("invalid permutation");
    seen[p] = true;
  }
  Dims out_dims(dims.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out_dims[k] = dims[perm[k]];

  const std::size_t n = product(dims);
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = digits_of(i, dims);
    std::size_t y = 0;
    for (std::size_t k = 0; k < perm.size(); ++k) y = y * out_dims[k] + x[perm[k]];
    map[i] = y;
  }
  return map;
}

Dims permuted_dims(std::span<const std::size_t> dims, std::span<const std::size_t> perm) {
  Dims out(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out[k] = dims[perm[k]];
  return out;
}

}  // namespace

ComplexMatrix permute_systems(const ComplexMatrix& m, std::span<const std::size_t> dims,
                              std::span<const std::size_t> perm) {
  if (m.rows() != m.cols()) throw DimensionError("permute_systems needs a square operator");
  require_dims_match(static_cast<std::size_t>(m.rows()), dims);
  const auto map = permutation_map(dims, perm);
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < map.size(); ++i) {
    for (std::size_t j = 0; j < map.size(); ++j) {
      out(static_cast<Eigen::Index>(map[i]), static_cast<Eigen::Index>(map[j])) =
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

DensityOperator permute_systems(const DensityOperator& rho, std::span<const std::size_t> perm) {
  return DensityOperator::trusted(permute_systems(rho.matrix(), rho.dims(), perm),
                                  permuted_dims(rho.dims(), perm));
}

PureState permute_systems(const PureState& psi, std::span<const std::size_t> perm) {
  const auto map = permutation_map(psi.dims(), perm);
  ComplexVector out(psi.amplitudes().size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    out(static_cast<Eigen::Index>(map[i])) = psi.amplitudes()(static_cast<Eigen::Index>(i));
  }
  return PureState(std::move(out), permuted_dims(psi.dims(), perm));
}

// ---------------------------------------------------------------------------
// Spectra and entropies

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (hermiticity_defect(m) > kHermitianTol) {
    throw InvalidArgument("hermitian_eigenvalues: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double entropy_of_spectrum(std::span<const double> spectrum) {
  double s = 0.0;
  for (double x : spectrum) {
    if (x < -kNegativeEigenTol) throw InvalidState("spectrum has a negative eigenvalue");
    if (x < kSpectrumClip) continue;
    s -= x * std::log2(x);
  }
  return std::max(s, 0.0);
}

double von_neumann_entropy(const DensityOperator& rho) {
  const auto spectrum = hermitian_eigenvalues(rho.matrix());
  return entropy_of_spectrum(spectrum);
}

double shannon_entropy(std::span<const double> probabilities) {
  double total = 0.0;
  for (double x : probabilities) {
    if (!(x >= -1e-12)) throw InvalidArgument("probability vector has a negative entry");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidArgument("probability vector does not sum to 1");
  double h = 0.0;
  for (double x : probabilities) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return std::max(h, 0.0);
}

double entropy_directional_derivative(const DensityOperator& rho, const ComplexMatrix& delta) {
  if (delta.rows() != delta.cols() || static_cast<std::size_t>(delta.rows()) != rho.dim()) {
    throw DimensionError("direction does not match the state dimension");
  }
  if (hermiticity_defect(delta) > kHermitianTol) {
    throw InvalidArgument("direction is not Hermitian");
  }
  if (std::abs(delta.trace()) > kTraceTol) throw InvalidArgument("direction is not traceless");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix());
  const auto& lambda = solver.eigenvalues();
  const ComplexMatrix rotated = solver.eigenvectors().adjoint() * delta * solver.eigenvectors();

  double derivative = 0.0;
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    const double weight = rotated(k, k).real();
    if (lambda(k) < kSpectrumClip) {
      if (std::abs(weight) > kHermitianTol) {
        throw Divergence("direction has weight on the kernel of the state");
      }
      continue;
    }
    derivative -= weight * std::log2(lambda(k));
  }
  return derivative;
}

}  // namespace qmac
