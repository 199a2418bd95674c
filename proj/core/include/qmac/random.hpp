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

// Seeded sampling of states, directions and distributions.
//
// Every stochastic routine takes one master seed. Independent work items
// (restarts, trials) draw from stream_rng(master, k), so a result never
// depends on how the items were scheduled.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qmac/hilbert.hpp"

namespace qmac {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer over (master, stream).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

inline Rng stream_rng(std::uint64_t master, std::uint64_t stream) {
  return Rng(derive_seed(master, stream));
}

/// Haar-random unit vector on the given factors.
PureState haar_pure_state(const Dims& dims, Rng& rng);

/// Full-rank random state from a square complex Ginibre matrix G: GG^+/Tr.
DensityOperator random_density(const Dims& dims, Rng& rng);

/// Random Hermitian traceless matrix with unit Frobenius norm.
ComplexMatrix random_traceless_hermitian(std::size_t dim, Rng& rng);

/// Symmetric Dirichlet(1) sample, i.e. uniform on the simplex.
std::vector<double> dirichlet_uniform(std::size_t n, Rng& rng);

}  // namespace qmac
