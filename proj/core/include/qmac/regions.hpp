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

// Two-sender rate regions as convex polygons in the (R_A, R_B) plane.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmac/channels.hpp"
#include "qmac/infoq.hpp"

namespace qmac {

inline constexpr double kRegionTol = 1e-9;
// Clipping starts from [0, kRateBox]^2; no in-scope rate comes close.
inline constexpr double kRateBox = 64.0;

struct RatePoint {
  double ra = 0.0;
  double rb = 0.0;

  friend bool operator==(const RatePoint&, const RatePoint&) = default;
};

/// a * R_A + b * R_B <= c.
struct Halfspace {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Convex polygon in the nonnegative quadrant, stored counter-clockwise
/// from its lexicographically smallest vertex with duplicates and collinear
/// points removed. Points and segments are valid (degenerate) regions.
class RateRegion2D {
 public:
  /// Convex hull of the given points. Throws GeometryError for an empty
  /// input or a point below -kRegionTol in either coordinate.
  static RateRegion2D hull_of(std::span<const RatePoint> points);

  const std::vector<RatePoint>& vertices() const { return vertices_; }

 private:
  explicit RateRegion2D(std::vector<RatePoint> vertices) : vertices_(std::move(vertices)) {}
  std::vector<RatePoint> vertices_;
};

RateRegion2D convex_hull(std::span<const RatePoint> points);

/// Intersection of the halfspaces with the nonnegative quadrant.
/// Throws GeometryError when it is empty or unbounded, InvalidArgument for
/// a halfspace with (a, b) = (0, 0).
RateRegion2D region_from_halfspaces(std::span<const Halfspace> halfspaces);

/// {u + v : u in p, v in q} by merging edge vectors in angular order.
RateRegion2D minkowski_sum(const RateRegion2D& p, const RateRegion2D& q);

double area(const RateRegion2D& r);

/// Euclidean distance from pt to the region (0 inside).
double distance_to_region(const RateRegion2D& r, RatePoint pt);

/// Symmetric Hausdorff distance between two convex regions.
double hausdorff_distance(const RateRegion2D& p, const RateRegion2D& q);

bool contains(const RateRegion2D& r, RatePoint pt);
/// p is a subset of q (within kRegionTol).
bool subset(const RateRegion2D& p, const RateRegion2D& q);
/// p is a subset of q and some vertex of q lies at least 1e-6 outside p.
bool strict_subset(const RateRegion2D& p, const RateRegion2D& q);

/// {R_A <= I(A:C|B), R_B <= I(B:C|A), R_A + R_B <= I(AB:C)} with rates >= 0.
RateRegion2D region_from_triple(const MacInfoTriple& triple);

RateRegion2D pentagon_from_ensembles(const KrausChannel& ch, const Ensemble& alice,
                                     const Ensemble& bob);

struct RegionSamplingConfig {
  std::size_t samples = 200;       // random ensemble pairs
  std::uint64_t seed = 0;
  std::size_t ensemble_size = 2;   // states per random ensemble
};

/// Inner bound on the one-shot region of a two-sender channel: hull of the
/// pentagons of every pair of uniform computational-basis ensembles (sizes
/// 1..d per sender) and of cfg.samples random pure-state ensemble pairs.
RateRegion2D achievable_region(const KrausChannel& ch, const RegionSamplingConfig& cfg);

enum class KnownRegion { kPhi1, kPsiId, kPhi1xPsiId, kMinkowskiPhi1PsiId };

/// Accepts "phi1", "psi_id", "phi1_x_psi_id", "minkowski_phi1_psi_id".
KnownRegion parse_known_region(std::string_view name);
std::string_view to_string(KnownRegion which);
RateRegion2D known_region(KnownRegion which);

/// {"name": ..., "vertices": [[ra, rb], ...], "units": "bits/use"} with
/// coordinates rounded to 12 significant digits.
nlohmann::json region_to_json(std::string_view name, const RateRegion2D& r);
RateRegion2D region_from_json(const nlohmann::json& j);

/// Rounds to the given number of significant decimal digits.
double round_significant(double x, int digits = 12);

}  // namespace qmac
