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

#include "qmac/random.hpp"

#include <cmath>

#include "qmac/error.hpp"

namespace qmac {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

PureState haar_pure_state(const Dims& dims, Rng& rng) {
  const ComplexMatrix g = ginibre(product(dims), 1, rng);
  ComplexVector v = g.col(0);
  v /= v.norm();
  return PureState(std::move(v), dims);
}

DensityOperator random_density(const Dims& dims, Rng& rng) {
  const auto d = product(dims);
  const ComplexMatrix g = ginibre(d, d, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityOperator::trusted(std::move(rho), dims);
}

ComplexMatrix random_traceless_hermitian(std::size_t dim, Rng& rng) {
  if (dim < 2) throw InvalidArgument("traceless directions need dimension >= 2");
  const ComplexMatrix g = ginibre(dim, dim, rng);
  ComplexMatrix h = (g + g.adjoint()) * 0.5;
  const Complex shift = h.trace() / static_cast<double>(dim);
  for (Eigen::Index k = 0; k < h.rows(); ++k) h(k, k) -= shift;
  h /= h.norm();
  return h;
}

std::vector<double> dirichlet_uniform(std::size_t n, Rng& rng) {
  if (n == 0) throw InvalidArgument("dirichlet sample needs n >= 1");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> out(n);
  double total = 0.0;
  for (auto& x : out) {
    x = expo(rng);
    total += x;
  }
  for (auto& x : out) x /= total;
  return out;
}

}  // namespace qmac
