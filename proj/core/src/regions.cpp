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

#include "qmac/regions.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "qmac/error.hpp"
#include "qmac/random.hpp"

namespace qmac {
namespace {

constexpr double kClipTol = 1e-12;
constexpr double kStrictGap = 1e-6;

RatePoint operator+(RatePoint u, RatePoint v) { return {u.ra + v.ra, u.rb + v.rb}; }
RatePoint operator-(RatePoint u, RatePoint v) { return {u.ra - v.ra, u.rb - v.rb}; }

double cross(RatePoint u, RatePoint v) { return u.ra * v.rb - u.rb * v.ra; }
double dot(RatePoint u, RatePoint v) { return u.ra * v.ra + u.rb * v.rb; }

bool lex_less(RatePoint u, RatePoint v) {
  return u.ra < v.ra || (u.ra == v.ra && u.rb < v.rb);
}

double segment_distance(RatePoint pt, RatePoint a, RatePoint b) {
  const RatePoint ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(pt - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const RatePoint closest{a.ra + t * ab.ra, a.rb + t * ab.rb};
  return std::hypot(pt.ra - closest.ra, pt.rb - closest.rb);
}

// One Sutherland-Hodgman pass of a convex polygon against a halfspace.
std::vector<RatePoint> clip(const std::vector<RatePoint>& poly, const Halfspace& h) {
  auto level = [&](RatePoint u) { return h.a * u.ra + h.b * u.rb - h.c; };
  std::vector<RatePoint> out;
  const std::size_t n = poly.size();
  for (std::size_t k = 0; k < n; ++k) {
    const RatePoint cur = poly[k];
    const RatePoint next = poly[(k + 1) % n];
    const double lc = level(cur);
    const double ln = level(next);
    const bool cur_in = lc <= kClipTol;
    const bool next_in = ln <= kClipTol;
    if (cur_in) out.push_back(cur);
    if (cur_in != next_in) {
      const double t = lc / (lc - ln);
      out.push_back({cur.ra + t * (next.ra - cur.ra), cur.rb + t * (next.rb - cur.rb)});
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

RateRegion2D RateRegion2D::hull_of(std::span<const RatePoint> points) {
  if (points.empty()) throw GeometryError("convex hull of an empty point set");
  std::vector<RatePoint> pts;
  pts.reserve(points.size());
  for (RatePoint u : points) {
    if (!std::isfinite(u.ra) || !std::isfinite(u.rb)) throw GeometryError("non-finite rate point");
    if (u.ra < -kRegionTol || u.rb < -kRegionTol) {
      throw GeometryError("rate point outside the nonnegative quadrant");
    }
    pts.push_back({std::max(u.ra, 0.0), std::max(u.rb, 0.0)});
  }
  std::sort(pts.begin(), pts.end(), lex_less);

  std::vector<RatePoint> unique;
  for (RatePoint u : pts) {
    const bool duplicate = std::any_of(unique.begin(), unique.end(), [&](RatePoint v) {
      return std::abs(u.ra - v.ra) <= kRegionTol && std::abs(u.rb - v.rb) <= kRegionTol;
    });
    if (!duplicate) unique.push_back(u);
  }
  if (unique.size() <= 2) return RateRegion2D(std::move(unique));

  // Andrew's monotone chain; collinear points are dropped.
  auto turn_tol = [](RatePoint o, RatePoint a, RatePoint b) {
    return kRegionTol * std::max({1.0, std::hypot(a.ra - o.ra, a.rb - o.rb),
                                  std::hypot(b.ra - o.ra, b.rb - o.rb)});
  };
  std::vector<RatePoint> hull(2 * unique.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], unique[i] - hull[k - 2]) <=
                         turn_tol(hull[k - 2], hull[k - 1], unique[i])) {
      --k;
    }
    hull[k++] = unique[i];
  }
  for (std::size_t i = unique.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], unique[i] - hull[k - 2]) <=
                             turn_tol(hull[k - 2], hull[k - 1], unique[i])) {
      --k;
    }
    hull[k++] = unique[i];
  }
  hull.resize(k - 1);
  return RateRegion2D(std::move(hull));
}

RateRegion2D convex_hull(std::span<const RatePoint> points) { return RateRegion2D::hull_of(points); }

RateRegion2D region_from_halfspaces(std::span<const Halfspace> halfspaces) {
  std::vector<RatePoint> poly{{0.0, 0.0}, {kRateBox, 0.0}, {kRateBox, kRateBox}, {0.0, kRateBox}};
  for (const Halfspace& h : halfspaces) {
    if (h.a == 0.0 && h.b == 0.0) throw InvalidArgument("halfspace with zero normal");
    poly = clip(poly, h);
    if (poly.empty()) throw GeometryError("halfspace intersection is empty");
  }
  for (RatePoint u : poly) {
    if (u.ra >= kRateBox - kRegionTol || u.rb >= kRateBox - kRegionTol) {
      throw GeometryError("halfspace intersection is unbounded");
    }
  }
  return RateRegion2D::hull_of(poly);
}

RateRegion2D minkowski_sum(const RateRegion2D& p, const RateRegion2D& q) {
  // Start both polygons at their lowest (then leftmost) vertex.
  auto rotated = [](const std::vector<RatePoint>& v) {
    auto lowest = std::min_element(v.begin(), v.end(), [](RatePoint a, RatePoint b) {
      return a.rb < b.rb || (a.rb == b.rb && a.ra < b.ra);
    });
    std::vector<RatePoint> out(lowest, v.end());
    out.insert(out.end(), v.begin(), lowest);
    return out;
  };
  std::vector<RatePoint> a = rotated(p.vertices());
  std::vector<RatePoint> b = rotated(q.vertices());
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  a.push_back(a[0]);
  a.push_back(a[1 % n]);
  b.push_back(b[0]);
  b.push_back(b[1 % m]);

  std::vector<RatePoint> sum;
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    sum.push_back(a[i] + b[j]);
    const double turn = cross(a[i + 1] - a[i], b[j + 1] - b[j]);
    if (turn >= 0.0 && i < n) ++i;
    if (turn <= 0.0 && j < m) ++j;
  }
  return RateRegion2D::hull_of(sum);
}

// ---------------------------------------------------------------------------
// Measurements and predicates

double area(const RateRegion2D& r) {
  const auto& v = r.vertices();
  double twice = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) twice += cross(v[k], v[(k + 1) % v.size()]);
  return 0.5 * std::abs(twice);
}

double distance_to_region(const RateRegion2D& r, RatePoint pt) {
  const auto& v = r.vertices();
  if (v.size() == 1) return std::hypot(pt.ra - v[0].ra, pt.rb - v[0].rb);
  if (v.size() >= 3) {
    bool inside = true;
    for (std::size_t k = 0; k < v.size() && inside; ++k) {
      inside = cross(v[(k + 1) % v.size()] - v[k], pt - v[k]) >= 0.0;
    }
    if (inside) return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < v.size(); ++k) {
    best = std::min(best, segment_distance(pt, v[k], v[(k + 1) % v.size()]));
  }
  return best;
}

double hausdorff_distance(const RateRegion2D& p, const RateRegion2D& q) {
  double d = 0.0;
  for (RatePoint u : p.vertices()) d = std::max(d, distance_to_region(q, u));
  for (RatePoint u : q.vertices()) d = std::max(d, distance_to_region(p, u));
  return d;
}

bool contains(const RateRegion2D& r, RatePoint pt) { return distance_to_region(r, pt) <= kRegionTol; }

bool subset(const RateRegion2D& p, const RateRegion2D& q) {
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [&](RatePoint u) { return contains(q, u); });
}

bool strict_subset(const RateRegion2D& p, const RateRegion2D& q) {
  if (!subset(p, q)) return false;
  return std::any_of(q.vertices().begin(), q.vertices().end(),
                     [&](RatePoint u) { return distance_to_region(p, u) >= kStrictGap; });
}

// ---------------------------------------------------------------------------
// Regions from channels

RateRegion2D region_from_triple(const MacInfoTriple& triple) {
  // Informations are >= -1e-9 by construction; clamp the dust.
  const std::array<Halfspace, 3> hs{{
      {1.0, 0.0, std::max(triple.i_a_c_given_b, 0.0)},
      {0.0, 1.0, std::max(triple.i_b_c_given_a, 0.0)},
      {1.0, 1.0, std::max(triple.i_ab_c, 0.0)},
  }};
  return region_from_halfspaces(hs);
}

RateRegion2D pentagon_from_ensembles(const KrausChannel& ch, const Ensemble& alice, const Ensemble& bob) {
  return region_from_triple(mac_mutual_informations(ch, alice, bob));
}

RateRegion2D achievable_region(const KrausChannel& ch, const RegionSamplingConfig& cfg) {
  if (ch.in_dims().size() != 2) throw DimensionError("achievable_region needs a two-sender channel");
  if (cfg.ensemble_size == 0) throw InvalidArgument("achievable_region: ensemble_size must be positive");
  const std::size_t da = ch.in_dims()[0];
  const std::size_t db = ch.in_dims()[1];

  std::vector<RatePoint> points{{0.0, 0.0}};
  auto absorb = [&](const Ensemble& alice, const Ensemble& bob) {
    const auto region = pentagon_from_ensembles(ch, alice, bob);
    points.insert(points.end(), region.vertices().begin(), region.vertices().end());
  };

  for (std::size_t ma = 1; ma <= da; ++ma) {
    for (std::size_t mb = 1; mb <= db; ++mb) {
      absorb(Ensemble::uniform_basis({da}, ma), Ensemble::uniform_basis({db}, mb));
    }
  }

  auto random_ensemble = [&](std::size_t dim, Rng& rng) {
    std::vector<DensityOperator> states;
    for (std::size_t k = 0; k < cfg.ensemble_size; ++k) states.push_back(haar_pure_state({dim}, rng).density());
    return Ensemble(dirichlet_uniform(cfg.ensemble_size, rng), std::move(states));
  };
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    Rng rng = stream_rng(cfg.seed, s);
    const Ensemble alice = random_ensemble(da, rng);
    const Ensemble bob = random_ensemble(db, rng);
    absorb(alice, bob);
  }
  return convex_hull(points);
}

// ---------------------------------------------------------------------------
// Named regions

KnownRegion parse_known_region(std::string_view name) {
  if (name == "phi1") return KnownRegion::kPhi1;
  if (name == "psi_id") return KnownRegion::kPsiId;
  if (name == "phi1_x_psi_id") return KnownRegion::kPhi1xPsiId;
  if (name == "minkowski_phi1_psi_id") return KnownRegion::kMinkowskiPhi1PsiId;
  throw InvalidArgument("unknown region name: " + std::string(name));
}

std::string_view to_string(KnownRegion which) {
  switch (which) {
    case KnownRegion::kPhi1: return "phi1";
    case KnownRegion::kPsiId: return "psi_id";
    case KnownRegion::kPhi1xPsiId: return "phi1_x_psi_id";
    case KnownRegion::kMinkowskiPhi1PsiId: return "minkowski_phi1_psi_id";
  }
  throw InvalidArgument("unknown region");
}

RateRegion2D known_region(KnownRegion which) {
  switch (which) {
    case KnownRegion::kPhi1: {
      const std::array<Halfspace, 1> hs{{{1.0, 1.0, 1.0}}};
      return region_from_halfspaces(hs);
    }
    case KnownRegion::kPsiId: {
      const std::array<Halfspace, 2> hs{{{1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}}};
      return region_from_halfspaces(hs);
    }
    case KnownRegion::kPhi1xPsiId: {
      const std::array<Halfspace, 2> hs{{{1.0, 1.0, 3.0}, {0.0, 1.0, 2.0}}};
      return region_from_halfspaces(hs);
    }
    case KnownRegion::kMinkowskiPhi1PsiId:
      return minkowski_sum(known_region(KnownRegion::kPhi1), known_region(KnownRegion::kPsiId));
  }
  throw InvalidArgument("unknown region");
}

// ---------------------------------------------------------------------------
// Serialization

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  std::array<char, 64> buf{};
  const auto written = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                     std::chars_format::general, digits);
  double out = x;
  std::from_chars(buf.data(), written.ptr, out);
  return out;
}

nlohmann::json region_to_json(std::string_view name, const RateRegion2D& r) {
  nlohmann::json vertices = nlohmann::json::array();
  for (RatePoint u : r.vertices()) {
    vertices.push_back({round_significant(u.ra), round_significant(u.rb)});
  }
  return {{"name", std::string(name)}, {"vertices", std::move(vertices)}, {"units", "bits/use"}};
}

RateRegion2D region_from_json(const nlohmann::json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw InvalidArgument("region record needs a vertices array");
  }
  if (j.contains("units") && j["units"] != "bits/use") throw InvalidArgument("region units must be bits/use");
  std::vector<RatePoint> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2) throw InvalidArgument("vertex must be a [R_A, R_B] pair");
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return convex_hull(pts);
}

}  // namespace qmac
