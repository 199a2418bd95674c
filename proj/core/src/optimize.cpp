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

#include "qmac/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "qmac/error.hpp"

namespace qmac {
namespace {

// Moduli of a real unit vector in R^n from n-1 polar angles.
std::vector<double> polar_moduli(std::span<const double> angles, std::size_t n) {
  std::vector<double> r(n);
  double sin_prod = 1.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    r[k] = sin_prod * std::cos(angles[k]);
    sin_prod *= std::sin(angles[k]);
  }
  r[n - 1] = sin_prod;
  return r;
}

std::vector<double> polar_angles(std::span<const double> r) {
  const std::size_t n = r.size();
  std::vector<double> angles(n > 0 ? n - 1 : 0);
  double tail = 0.0;
  std::vector<double> tail_norm(n, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    tail_norm[k] = std::sqrt(tail);
    tail += r[k] * r[k];
  }
  for (std::size_t k = 0; k + 1 < n; ++k) angles[k] = std::atan2(tail_norm[k], r[k]);
  return angles;
}

}  // namespace

CoordinateAscentResult coordinate_ascent(const std::function<double(std::span<const double>)>& f,
                                         std::vector<double> x0,
                                         const CoordinateAscentOptions& options) {
  CoordinateAscentResult result;
  result.x = std::move(x0);
  result.value = f(result.x);
  double step = options.initial_step;
  std::vector<double> trial = result.x;

  while (result.sweeps < options.iterations && step >= options.min_step) {
    ++result.sweeps;
    bool improved = false;
    for (std::size_t i = 0; i < result.x.size(); ++i) {
      for (double sign : {1.0, -1.0}) {
        trial[i] = result.x[i] + sign * step;
        const double value = f(trial);
        if (value > result.value) {
          result.value = value;
          result.x[i] = trial[i];
          improved = true;
          break;
        }
        trial[i] = result.x[i];
      }
    }
    if (!improved) step *= options.shrink;
  }
  return result;
}

std::size_t sphere_angle_count(std::size_t dim) { return dim == 0 ? 0 : 2 * (dim - 1); }

ComplexVector unit_vector_from_angles(std::span<const double> angles, std::size_t dim) {
  if (dim == 0 || angles.size() != sphere_angle_count(dim)) {
    throw InvalidArgument("unit_vector_from_angles: wrong angle count");
  }
  const auto moduli = polar_moduli(angles.first(dim - 1), dim);
  ComplexVector v(static_cast<Eigen::Index>(dim));
  v(0) = moduli[0];
  for (std::size_t k = 1; k < dim; ++k) {
    v(static_cast<Eigen::Index>(k)) = std::polar(moduli[k], angles[dim - 1 + k - 1]);
  }
  return v;
}

std::vector<double> angles_from_unit_vector(const ComplexVector& v) {
  const auto dim = static_cast<std::size_t>(v.size());
  if (dim == 0) throw InvalidArgument("angles_from_unit_vector: empty vector");
  // Remove the global phase so that the first nonzero-modulus reference is real.
  const Complex ref = v(0);
  const Complex unphase = std::abs(ref) > 0.0 ? std::conj(ref) / std::abs(ref) : Complex(1.0, 0.0);
  std::vector<double> moduli(dim);
  for (std::size_t k = 0; k < dim; ++k) moduli[k] = std::abs(v(static_cast<Eigen::Index>(k)));
  auto angles = polar_angles(moduli);
  for (std::size_t k = 1; k < dim; ++k) angles.push_back(std::arg(unphase * v(static_cast<Eigen::Index>(k))));
  return angles;
}

std::size_t simplex_angle_count(std::size_t n) { return n == 0 ? 0 : n - 1; }

std::vector<double> probabilities_from_angles(std::span<const double> angles, std::size_t n) {
  if (n == 0 || angles.size() != simplex_angle_count(n)) {
    throw InvalidArgument("probabilities_from_angles: wrong angle count");
  }
  auto r = polar_moduli(angles, n);
  double total = 0.0;
  for (auto& x : r) {
    x *= x;
    total += x;
  }
  for (auto& x : r) x /= total;
  return r;
}

std::vector<double> angles_from_probabilities(std::span<const double> probs) {
  std::vector<double> r(probs.size());
  for (std::size_t k = 0; k < probs.size(); ++k) r[k] = std::sqrt(std::max(probs[k], 0.0));
  return polar_angles(r);
}

}  // namespace qmac
