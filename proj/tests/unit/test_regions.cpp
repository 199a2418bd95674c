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

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "qmac/error.hpp"
#include "qmac/random.hpp"
#include "qmac/regions.hpp"

using namespace qmac;
using Catch::Matchers::WithinAbs;

namespace {

RateRegion2D triangle() { return known_region(KnownRegion::kPhi1); }
RateRegion2D square() { return known_region(KnownRegion::kPsiId); }

RateRegion2D random_polygon(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 3.0);
  std::uniform_int_distribution<int> count(1, 9);
  std::vector<RatePoint> pts(static_cast<std::size_t>(count(rng)));
  for (auto& p : pts) p = {u(rng), u(rng)};
  return convex_hull(pts);
}

bool canonical(const RateRegion2D& r) {
  const auto& v = r.vertices();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].ra < -kRegionTol || v[k].rb < -kRegionTol) return false;
    if (k > 0 && (v[k].ra < v[0].ra || (v[k].ra == v[0].ra && v[k].rb < v[0].rb))) return false;
    if (v.size() >= 3) {
      const auto a = v[k], b = v[(k + 1) % v.size()], c = v[(k + 2) % v.size()];
      const double turn = (b.ra - a.ra) * (c.rb - b.rb) - (b.rb - a.rb) * (c.ra - b.ra);
      if (turn < -1e-9) return false;
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (std::abs(v[j].ra - v[k].ra) <= 1e-9 && std::abs(v[j].rb - v[k].rb) <= 1e-9) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("halfspace intersection yields canonical polygons") {
  const std::array<Halfspace, 2> box{{{1, 0, 1}, {0, 1, 1}}};
  CHECK(oracle::same_vertices(region_from_halfspaces(box), {{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  const std::array<Halfspace, 3> tri{{{1, 0, 1}, {0, 1, 1}, {1, 1, 1}}};
  CHECK(oracle::same_vertices(region_from_halfspaces(tri), {{0, 0}, {1, 0}, {0, 1}}));
  const std::array<Halfspace, 2> quad{{{1, 1, 3}, {0, 1, 2}}};
  CHECK(oracle::same_vertices(region_from_halfspaces(quad), {{0, 0}, {3, 0}, {1, 2}, {0, 2}}));
}

TEST_CASE("halfspace intersection errors") {
  const std::array<Halfspace, 1> unbounded{{{1, 0, 1}}};
  CHECK_THROWS_AS(region_from_halfspaces(unbounded), GeometryError);
  const std::array<Halfspace, 1> empty{{{1, 1, -1}}};
  CHECK_THROWS_AS(region_from_halfspaces(empty), GeometryError);
  const std::array<Halfspace, 2> zero{{{0, 0, 1}, {1, 1, 1}}};
  CHECK_THROWS_AS(region_from_halfspaces(zero), InvalidArgument);
}

TEST_CASE("zero bounds give degenerate regions") {
  const std::array<Halfspace, 3> point{{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}};
  CHECK(oracle::same_vertices(region_from_halfspaces(point), {{0, 0}}));
  const std::array<Halfspace, 2> segment{{{1, 0, 0}, {0, 1, 2}}};
  CHECK(oracle::same_vertices(region_from_halfspaces(segment), {{0, 0}, {0, 2}}));
}

TEST_CASE("convex hull canonical forms") {
  const std::vector<RatePoint> corners{{1, 1}, {0, 1}, {1, 0}, {0, 0}, {0.5, 0.5}};
  CHECK(oracle::same_vertices(convex_hull(corners), {{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  const std::vector<RatePoint> collinear{{0, 0}, {2, 2}, {1, 1}, {0.5, 0.5}};
  CHECK(oracle::same_vertices(convex_hull(collinear), {{0, 0}, {2, 2}}));
  const std::vector<RatePoint> duplicates{{1, 1}, {1, 1 + 1e-12}};
  CHECK(convex_hull(duplicates).vertices().size() == 1);
  CHECK_THROWS_AS(convex_hull(std::vector<RatePoint>{}), GeometryError);
  CHECK_THROWS_AS(convex_hull(std::vector<RatePoint>{{-1, 0}}), GeometryError);
  CHECK_NOTHROW(convex_hull(std::vector<RatePoint>{{-1e-10, 0}}));
}

TEST_CASE("hull of sampled pentagon boundary points recovers the pentagon") {
  const auto pent = known_region(KnownRegion::kMinkowskiPhi1PsiId);
  std::vector<RatePoint> samples;
  const auto& v = pent.vertices();
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto a = v[k], b = v[(k + 1) % v.size()];
    for (int s = 0; s < 17; ++s) {
      const double t = s / 17.0;
      samples.push_back({a.ra + t * (b.ra - a.ra), a.rb + t * (b.rb - a.rb)});
    }
  }
  CHECK(hausdorff_distance(convex_hull(samples), pent) < 1e-9);
  CHECK(convex_hull(samples).vertices() == pent.vertices());
}

TEST_CASE("Minkowski sum with the origin is the identity") {
  const RateRegion2D origin = convex_hull(std::vector<RatePoint>{{0, 0}});
  Rng rng = stream_rng(1, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_polygon(rng);
    CHECK(hausdorff_distance(minkowski_sum(p, origin), p) < 1e-12);
  }
}

TEST_CASE("Minkowski sum of triangle and square") {
  const auto sum = minkowski_sum(triangle(), square());
  CHECK(oracle::same_vertices(sum, {{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}}));
  CHECK(sum.vertices() == oracle::minkowski_brute_force(triangle(), square()).vertices());
}

TEST_CASE("Minkowski sum of rectangle and triangle") {
  const std::array<Halfspace, 2> rect{{{1, 0, 0.5}, {0, 1, 1}}};
  const auto sum = minkowski_sum(region_from_halfspaces(rect), triangle());
  CHECK(oracle::same_vertices(sum, {{0, 0}, {1.5, 0}, {1.5, 1}, {0.5, 2}, {0, 2}}));
}

TEST_CASE("Minkowski sum matches the vertex-pair hull on random polygons") {
  Rng rng = stream_rng(2, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_polygon(rng);
    const auto q = random_polygon(rng);
    const auto fast = minkowski_sum(p, q);
    CHECK(canonical(fast));
    CHECK(hausdorff_distance(fast, oracle::minkowski_brute_force(p, q)) < 1e-9);
  }
}

TEST_CASE("Minkowski sum is commutative, associative and area-superadditive") {
  Rng rng = stream_rng(3, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_polygon(rng);
    const auto q = random_polygon(rng);
    const auto r = random_polygon(rng);
    CHECK(hausdorff_distance(minkowski_sum(p, q), minkowski_sum(q, p)) < 1e-9);
    CHECK(hausdorff_distance(minkowski_sum(minkowski_sum(p, q), r), minkowski_sum(p, minkowski_sum(q, r))) < 1e-9);
    CHECK(area(minkowski_sum(p, q)) >= area(p) + area(q) - 1e-9);
  }
}

TEST_CASE("area by the shoelace formula") {
  CHECK_THAT(area(square()), WithinAbs(1.0, 1e-15));
  CHECK_THAT(area(triangle()), WithinAbs(0.5, 1e-15));
  CHECK_THAT(area(known_region(KnownRegion::kPhi1xPsiId)), WithinAbs(4.0, 1e-15));
  CHECK_THAT(area(known_region(KnownRegion::kMinkowskiPhi1PsiId)), WithinAbs(3.5, 1e-15));
  CHECK(area(convex_hull(std::vector<RatePoint>{{0, 0}, {1, 1}})) == 0.0);
}

TEST_CASE("distances and Hausdorff distance") {
  CHECK(distance_to_region(square(), {0.5, 0.5}) == 0.0);
  CHECK_THAT(distance_to_region(square(), {2, 1}), WithinAbs(1.0, 1e-15));
  CHECK_THAT(distance_to_region(triangle(), {1, 1}), WithinAbs(std::numbers::sqrt2 / 2, 1e-15));
  CHECK_THAT(distance_to_region(convex_hull(std::vector<RatePoint>{{1, 1}}), {1, 2}), WithinAbs(1.0, 1e-15));
  CHECK_THAT(hausdorff_distance(square(), triangle()), WithinAbs(std::numbers::sqrt2 / 2, 1e-15));
  CHECK(hausdorff_distance(square(), square()) == 0.0);
}

TEST_CASE("containment predicates") {
  const auto product = known_region(KnownRegion::kPhi1xPsiId);
  const auto sum = known_region(KnownRegion::kMinkowskiPhi1PsiId);
  CHECK(contains(product, {3, 0}));
  CHECK_FALSE(contains(sum, {3, 0}));
  CHECK(contains(square(), {1 + 1e-10, 1}));
  CHECK_FALSE(contains(square(), {1 + 1e-8, 1}));
  CHECK(subset(product, product));
  CHECK_FALSE(strict_subset(product, product));
  CHECK_FALSE(subset(square(), triangle()));
  CHECK(subset(triangle(), square()));
  CHECK(strict_subset(triangle(), square()));
}

TEST_CASE("the Minkowski sum of the two single-channel regions is strictly inside the product region") {
  const auto product = known_region(KnownRegion::kPhi1xPsiId);
  const auto sum = known_region(KnownRegion::kMinkowskiPhi1PsiId);
  CHECK(strict_subset(sum, product));
  CHECK_THAT(area(product) - area(sum), WithinAbs(0.5, 1e-9));
}

TEST_CASE("named regions") {
  CHECK(oracle::same_vertices(known_region(KnownRegion::kPhi1), {{0, 0}, {1, 0}, {0, 1}}));
  CHECK(oracle::same_vertices(known_region(KnownRegion::kPsiId), {{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK(oracle::same_vertices(known_region(KnownRegion::kPhi1xPsiId), {{0, 0}, {3, 0}, {1, 2}, {0, 2}}));
  CHECK(oracle::same_vertices(known_region(KnownRegion::kMinkowskiPhi1PsiId), {{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}}));
  for (auto which : {KnownRegion::kPhi1, KnownRegion::kPsiId, KnownRegion::kPhi1xPsiId, KnownRegion::kMinkowskiPhi1PsiId}) {
    CHECK(parse_known_region(to_string(which)) == which);
  }
  CHECK_THROWS_AS(parse_known_region("phi2"), InvalidArgument);
}

TEST_CASE("pentagons from concrete ensembles") {
  const auto e4 = Ensemble::uniform_basis({4}, 2);
  const auto e2 = Ensemble::uniform_basis({2}, 2);
  CHECK(oracle::same_vertices(pentagon_from_ensembles(phi_p(1.0), e4, e2), {{0, 0}, {1, 0}, {0, 1}}, 1e-9));
  CHECK(oracle::same_vertices(pentagon_from_ensembles(psi_id(), e2, e2), {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 1e-9));
  CHECK(oracle::same_vertices(
      pentagon_from_ensembles(psi_id(), Ensemble::uniform_basis({2}, 1), Ensemble::uniform_basis({2}, 1)), {{0, 0}}, 1e-9));
}

TEST_CASE("pentagons stay inside the output-dimension square") {
  Rng rng = stream_rng(4, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const double p = (trial % 11) / 10.0;
    const Ensemble a(dirichlet_uniform(3, rng), {haar_pure_state({4}, rng).density(), random_density({4}, rng),
                                                 haar_pure_state({4}, rng).density()});
    const Ensemble b(dirichlet_uniform(2, rng), {haar_pure_state({2}, rng).density(), random_density({2}, rng)});
    const auto r = pentagon_from_ensembles(phi_p(p), a, b);
    CHECK(canonical(r));
    for (const auto& v : r.vertices()) {
      CHECK(v.ra <= 3.0 + 1e-9);
      CHECK(v.rb <= 3.0 + 1e-9);
    }
  }
}

TEST_CASE("sampled regions recover the analytic one-shot regions") {
  RegionSamplingConfig cfg;
  cfg.samples = 50;
  CHECK(hausdorff_distance(achievable_region(phi_p(1.0), cfg), triangle()) < 1e-3);
  CHECK(hausdorff_distance(achievable_region(psi_id(), cfg), square()) < 1e-3);
}

TEST_CASE("sampled regions are valid, seeded and monotone in the sample count") {
  RegionSamplingConfig cfg;
  cfg.samples = 0;
  const auto basis_only = achievable_region(phi_p(0.5), cfg);
  CHECK(canonical(basis_only));
  CHECK(contains(basis_only, {0, 0}));
  cfg.samples = 20;
  cfg.seed = 5;
  const auto twenty = achievable_region(phi_p(0.5), cfg);
  CHECK(subset(basis_only, twenty));
  cfg.samples = 40;
  const auto forty = achievable_region(phi_p(0.5), cfg);
  CHECK(subset(twenty, forty));
  cfg.samples = 20;
  CHECK(achievable_region(phi_p(0.5), cfg).vertices() == twenty.vertices());

  CHECK_THROWS_AS(achievable_region(gamma_p(0.5), cfg), DimensionError);
  cfg.ensemble_size = 0;
  CHECK_THROWS_AS(achievable_region(psi_id(), cfg), InvalidArgument);
}

TEST_CASE("region JSON round trip") {
  const auto sum = known_region(KnownRegion::kMinkowskiPhi1PsiId);
  const auto j = region_to_json("minkowski_phi1_psi_id", sum);
  CHECK(j["name"] == "minkowski_phi1_psi_id");
  CHECK(j["units"] == "bits/use");
  CHECK(j["vertices"].size() == 5);
  CHECK(j["vertices"][1][0] == 2.0);
  CHECK(region_from_json(j).vertices() == sum.vertices());
  CHECK_THROWS_AS(region_from_json(nlohmann::json::object()), InvalidArgument);
  CHECK_THROWS_AS(region_from_json({{"vertices", {{1, 2, 3}}}}), InvalidArgument);
  CHECK_THROWS_AS(region_from_json({{"vertices", {{1, 2}}}, {"units", "nats"}}), InvalidArgument);
}

TEST_CASE("rounding to significant digits") {
  CHECK(round_significant(1.0 / 3.0) == 0.333333333333);
  CHECK(round_significant(2.0) == 2.0);
  CHECK(round_significant(0.0) == 0.0);
  CHECK(round_significant(123456.7891234567, 6) == 123457.0);
  CHECK(round_significant(-1.23456789e-7, 3) == -1.23e-7);
}
