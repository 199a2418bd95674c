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

#include "qmac/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qmac/error.hpp"

namespace qmac {
namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument(std::string(what) + ": probability must lie in [0, 1]");
  }
}

Dims concat(const Dims& a, const Dims& b) {
  Dims out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// <k| on C^dim as a 1 x dim row.
ComplexMatrix bra(std::size_t dim, std::size_t k) {
  ComplexMatrix m = ComplexMatrix::Zero(1, static_cast<Eigen::Index>(dim));
  m(0, static_cast<Eigen::Index>(k)) = 1.0;
  return m;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, Dims in_dims, Dims out_dims)
    : kraus_(std::move(kraus)), in_dims_(std::move(in_dims)), out_dims_(std::move(out_dims)) {
  if (kraus_.empty()) throw DimensionError("channel needs at least one Kraus operator");
  if (in_dims_.empty() || out_dims_.empty()) throw DimensionError("channel dims must be non-empty");
  const auto in = static_cast<Eigen::Index>(product(in_dims_));
  const auto out = static_cast<Eigen::Index>(product(out_dims_));
  for (const auto& k : kraus_) {
    if (k.rows() != out || k.cols() != in) {
      throw DimensionError("Kraus operator shape does not match the declared dims");
    }
  }
  stacked_.resize(out * static_cast<Eigen::Index>(kraus_.size()), in);
  for (std::size_t r = 0; r < kraus_.size(); ++r) {
    stacked_.middleRows(static_cast<Eigen::Index>(r) * out, out) = kraus_[r];
  }
  if (trace_preservation_defect(*this) > kTracePreservationTol) {
    throw InvalidArgument("Kraus operators are not trace preserving");
  }
}

double trace_preservation_defect(const KrausChannel& ch) {
  const auto in = static_cast<Eigen::Index>(ch.in_dim());
  const ComplexMatrix sum = ch.stacked().adjoint() * ch.stacked();
  return (sum - ComplexMatrix::Identity(in, in)).cwiseAbs().maxCoeff();
}

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& x) {
  const auto in = static_cast<Eigen::Index>(ch.in_dim());
  if (x.rows() != in || x.cols() != in) throw DimensionError("operator does not match channel input");
  const auto out = static_cast<Eigen::Index>(ch.out_dim());
  ComplexMatrix y = ComplexMatrix::Zero(out, out);
  for (const auto& k : ch.kraus()) y.noalias() += k * x * k.adjoint();
  return y;
}

DensityOperator apply(const KrausChannel& ch, const DensityOperator& rho) {
  if (rho.dims() != ch.in_dims()) throw DimensionError("state dims do not match channel input");
  return DensityOperator::trusted(apply(ch, rho.matrix()), ch.out_dims());
}

DensityOperator apply(const KrausChannel& ch, const PureState& psi) {
  if (psi.dims() != ch.in_dims()) throw DimensionError("state dims do not match channel input");
  const auto out = static_cast<Eigen::Index>(ch.out_dim());
  const auto rank = static_cast<Eigen::Index>(ch.kraus().size());
  // Column r of `images` is K_r psi.
  const ComplexVector stacked_image = ch.stacked() * psi.amplitudes();
  const Eigen::Map<const ComplexMatrix> images(stacked_image.data(), out, rank);
  ComplexMatrix y = images * images.adjoint();
  return DensityOperator::trusted(std::move(y), ch.out_dims());
}

DensityOperator apply_on(const KrausChannel& ch, const DensityOperator& rho, std::size_t first) {
  const Dims& dims = rho.dims();
  const std::size_t m = ch.in_dims().size();
  if (first + m > dims.size()) throw DimensionError("channel factors exceed the state's factors");
  for (std::size_t k = 0; k < m; ++k) {
    if (dims[first + k] != ch.in_dims()[k]) {
      throw DimensionError("state factors do not match channel input");
    }
  }

  std::size_t left = 1, right = 1;
  for (std::size_t k = 0; k < first; ++k) left *= dims[k];
  for (std::size_t k = first + m; k < dims.size(); ++k) right *= dims[k];
  const std::size_t din = ch.in_dim();
  const std::size_t dout = ch.out_dim();
  const std::size_t n_in = left * din * right;
  const std::size_t n_out = left * dout * right;

  auto in_index = [&](std::size_t l, std::size_t b, std::size_t r) {
    return static_cast<Eigen::Index>((l * din + b) * right + r);
  };
  auto out_index = [&](std::size_t l, std::size_t a, std::size_t r) {
    return static_cast<Eigen::Index>((l * dout + a) * right + r);
  };

  const ComplexMatrix& x = rho.matrix();
  ComplexMatrix y = ComplexMatrix::Zero(static_cast<Eigen::Index>(n_out),
                                        static_cast<Eigen::Index>(n_out));
  ComplexMatrix half(static_cast<Eigen::Index>(n_out), static_cast<Eigen::Index>(n_in));
  for (const auto& k : ch.kraus()) {
    // half = (I (x) K (x) I) x
    half.setZero();
    for (std::size_t l = 0; l < left; ++l) {
      for (std::size_t a = 0; a < dout; ++a) {
        for (std::size_t b = 0; b < din; ++b) {
          const Complex kab = k(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
          if (kab == Complex(0.0, 0.0)) continue;
          for (std::size_t r = 0; r < right; ++r) {
            half.row(out_index(l, a, r)) += kab * x.row(in_index(l, b, r));
          }
        }
      }
    }
    // y += half (I (x) K (x) I)^+
    for (std::size_t l = 0; l < left; ++l) {
      for (std::size_t a = 0; a < dout; ++a) {
        for (std::size_t b = 0; b < din; ++b) {
          const Complex kab = std::conj(k(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)));
          if (kab == Complex(0.0, 0.0)) continue;
          for (std::size_t r = 0; r < right; ++r) {
            y.col(out_index(l, a, r)) += kab * half.col(in_index(l, b, r));
          }
        }
      }
    }
  }

  Dims out_dims(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(first));
  out_dims.insert(out_dims.end(), ch.out_dims().begin(), ch.out_dims().end());
  out_dims.insert(out_dims.end(), dims.begin() + static_cast<std::ptrdiff_t>(first + m), dims.end());
  return DensityOperator::trusted(std::move(y), std::move(out_dims));
}

KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.kraus().size() * b.kraus().size());
  for (const auto& ka : a.kraus()) {
    for (const auto& kb : b.kraus()) kraus.push_back(tensor(ka, kb));
  }
  return KrausChannel(std::move(kraus), concat(a.in_dims(), b.in_dims()),
                      concat(a.out_dims(), b.out_dims()));
}

KrausChannel compose(const KrausChannel& after, const KrausChannel& before) {
  if (before.out_dims() != after.in_dims()) {
    throw DimensionError("compose: output of the first map does not feed the second");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(after.kraus().size() * before.kraus().size());
  for (const auto& ka : after.kraus()) {
    for (const auto& kb : before.kraus()) kraus.push_back(ka * kb);
  }
  return KrausChannel(std::move(kraus), before.in_dims(), after.out_dims());
}

KrausChannel identity_channel(Dims dims) {
  const auto d = static_cast<Eigen::Index>(product(dims));
  return KrausChannel({ComplexMatrix::Identity(d, d)}, dims, dims);
}

KrausChannel unitary_channel(const ComplexMatrix& u, Dims dims) {
  return KrausChannel({u}, dims, dims);
}

KrausChannel dephasing(std::size_t dim) {
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < dim; ++k) kraus.push_back(basis_projector(dim, k));
  return KrausChannel(std::move(kraus), {dim}, {dim});
}

KrausChannel depolarizing(std::size_t dim, double p) {
  require_probability(p, "depolarizing");
  if (dim == 0) throw InvalidArgument("depolarizing: dimension must be positive");
  const auto d = static_cast<Eigen::Index>(dim);
  const double dd = static_cast<double>(dim);

  ComplexMatrix shift = ComplexMatrix::Zero(d, d);
  ComplexMatrix clock = ComplexMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    shift((k + 1) % d, k) = 1.0;
    clock(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / dd);
  }

  std::vector<ComplexMatrix> kraus;
  kraus.push_back(std::sqrt(1.0 - p + p / (dd * dd)) * ComplexMatrix::Identity(d, d));
  if (p > 0.0) {
    const double w = std::sqrt(p) / dd;
    ComplexMatrix xa = ComplexMatrix::Identity(d, d);
    for (Eigen::Index a = 0; a < d; ++a) {
      ComplexMatrix weyl = xa;
      for (Eigen::Index b = 0; b < d; ++b) {
        if (a != 0 || b != 0) kraus.push_back(w * weyl);
        weyl = weyl * clock;
      }
      xa = shift * xa;
    }
  }
  return KrausChannel(std::move(kraus), {dim}, {dim});
}

ComplexMatrix controlled_pauli_unitary() {
  ComplexMatrix u = ComplexMatrix::Zero(8, 8);
  for (std::size_t i = 0; i < 4; ++i) u += tensor(basis_projector(4, i), pauli(i));
  return u;
}

KrausChannel phi_p(double p) {
  require_probability(p, "phi_p");
  const KrausChannel noise = tensor_channels(depolarizing(4, p), identity_channel({2}));
  return compose(noise, unitary_channel(controlled_pauli_unitary(), {4, 2}));
}

KrausChannel psi_id() { return identity_channel({2, 2}); }

KrausChannel gamma_p(double p) {
  require_probability(p, "gamma_p");
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < 4; ++k) {
    // <k|_B U_up = sigma_k (x) <k| (x) I,  <k|_B U_down = I (x) <k| (x) sigma_k
    if (p < 1.0) kraus.push_back(std::sqrt(1.0 - p) * tensor(tensor(pauli(k), bra(4, k)), id2));
    if (p > 0.0) kraus.push_back(std::sqrt(p) * tensor(tensor(id2, bra(4, k)), pauli(k)));
  }
  return KrausChannel(std::move(kraus), {2, 4, 2}, {2, 2});
}

}  // namespace qmac
