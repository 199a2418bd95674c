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

// Derivative-free maximization helpers and the angle parametrizations the
// brute-force searches run on.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qmac/hilbert.hpp"

namespace qmac {

struct CoordinateAscentOptions {
  // One iteration is a full sweep over all coordinates.
  std::size_t iterations = 200;
  double initial_step = 0.5;
  double shrink = 0.5;
  double min_step = 1e-10;
};

struct CoordinateAscentResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t sweeps = 0;
};

/// Compass search: each sweep tries x_i +/- step for every coordinate and
/// keeps strict improvements; a sweep without improvement shrinks the step.
CoordinateAscentResult coordinate_ascent(const std::function<double(std::span<const double>)>& f,
                                         std::vector<double> x0,
                                         const CoordinateAscentOptions& options = {});

// Hyperspherical parametrization of unit vectors in C^d:
// d-1 polar angles for the moduli followed by d-1 relative phases.
std::size_t sphere_angle_count(std::size_t dim);
ComplexVector unit_vector_from_angles(std::span<const double> angles, std::size_t dim);
std::vector<double> angles_from_unit_vector(const ComplexVector& v);

// Probability vectors as squared moduli of a real unit vector in R^n
// (n-1 polar angles).
std::size_t simplex_angle_count(std::size_t n);
std::vector<double> probabilities_from_angles(std::span<const double> angles, std::size_t n);
std::vector<double> angles_from_probabilities(std::span<const double> probs);

}  // namespace qmac
