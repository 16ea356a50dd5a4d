#include <gtest/gtest.h>

#include <random>

#include "json.hpp"

#include "seminest/oracle.hpp"
#include "trials.hpp"

using namespace seminest;
using testing_support::clip_convex;
using testing_support::shoelace;

namespace {

Polygon shifted(const Polygon& p, double dx, double dy) {
  Polygon q = p;
  for (auto& v : q.vertices) {
    v.x += dx;
    v.y += dy;
  }
  return q;
}

// Normalization moves the box corner to the origin, so shift afterwards.
Polygon square(double x, double y, double s) {
  return shifted(validate_and_normalize(Polygon{{{0, 0}, {s, 0}, {s, s}, {0, s}}}), x, y);
}

Dataset squares_dataset(double width) {
  Dataset d;
  d.name = "sq";
  d.strip_width = width;
  Piece p;
  p.id = "sq";
  p.quantity = 3;
  p.polygon = square(0, 0, 2);
  d.pieces.push_back(p);
  return d;
}

PlacementRecord at(std::size_t copy, std::int64_t m, double y) {
  PlacementRecord r;
  r.piece_id = "sq";
  r.copy = copy;
  r.t = {m, y};
  return r;
}

}  // namespace

TEST(Interiors, TouchingIsNotIntersecting) {
  EXPECT_FALSE(interiors_intersect(square(0, 0, 2), square(2, 0, 2)));   // shared edge
  EXPECT_FALSE(interiors_intersect(square(0, 0, 2), square(2, 2, 2)));   // shared corner
  EXPECT_FALSE(interiors_intersect(square(0, 0, 2), square(1, 2, 2)));   // partial shared edge
  EXPECT_FALSE(interiors_intersect(square(0, 0, 2), square(5, 5, 1)));
  EXPECT_TRUE(interiors_intersect(square(0, 0, 2), square(0, 0, 2)));    // identical
  EXPECT_TRUE(interiors_intersect(square(0, 0, 4), square(1, 1, 1)));    // containment
  EXPECT_TRUE(interiors_intersect(square(0, 0, 2), square(1.9, 1.9, 2)));
}

TEST(Interiors, TriangleVertexOnEdge) {
  const Polygon tri = shifted(validate_and_normalize(Polygon{{{1, 2}, {3, 5}, {-1, 5}}}), -1, 2);
  EXPECT_FALSE(interiors_intersect(square(0, 0, 2), tri));
  EXPECT_TRUE(interiors_intersect(square(0, 0, 2), shifted(tri, 0, -0.01)));
}

TEST(Interiors, PlacedPolygonUsesRotationAndOffset) {
  const Polygon r = validate_and_normalize(Polygon{{{0, 0}, {4, 0}, {4, 1}, {0, 1}}});
  // Rotated a quarter turn the bar is 1 wide and 4 tall from the origin.
  const PlacedPolygon a{r, 0, 0, 90};
  const PlacedPolygon b{r, 1, 0, 90};
  const PlacedPolygon c{r, 0.5, 0, 90};
  EXPECT_FALSE(interiors_intersect(a, b));
  EXPECT_TRUE(interiors_intersect(a, c));
  const Aabb box = bounds(a.world());
  EXPECT_NEAR(box.min_x, 0, 1e-12);
  EXPECT_NEAR(box.max_x, 1, 1e-12);
  EXPECT_NEAR(box.max_y, 4, 1e-12);
}

// Two convex polygons: compare with Sutherland-Hodgman clipping.
TEST(IntersectionArea, MatchesConvexClipping) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> off(-2.0, 2.0);
  for (int k = 0; k < 2000; ++k) {
    const Polygon a = validate_and_normalize(testing_support::random_convex(rng, 3 + k % 8, 2.0));
    const Polygon b =
        shifted(validate_and_normalize(testing_support::random_convex(rng, 3 + k % 5, 1.5)), off(rng), off(rng));
    const double expect = std::abs(shoelace(clip_convex(a.vertices, b.vertices)));
    const double got = intersection_area(a, b).area;
    ASSERT_NEAR(got, expect, 1e-9) << "trial " << k;
  }
}

TEST(IntersectionArea, SymmetricAndTranslationInvariant) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> off(-3.0, 3.0);
  for (int k = 0; k < 500; ++k) {
    const Polygon a = testing_support::random_trial_polygon(rng);
    const Polygon b = shifted(testing_support::random_trial_polygon(rng), off(rng), off(rng));
    const double ab = intersection_area(a, b).area;
    const double ba = intersection_area(b, a).area;
    EXPECT_NEAR(ab, ba, 1e-9);
    const double dx = off(rng) * 100, dy = off(rng) * 100;
    EXPECT_NEAR(intersection_area(shifted(a, dx, dy), shifted(b, dx, dy)).area, ab, 1e-7);
    EXPECT_LE(ab, std::min(area(a), area(b)) + 1e-9);
  }
}

TEST(IntersectionArea, SelfAreaAndWitness) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const Polygon a = testing_support::random_trial_polygon(rng);
    const auto r = intersection_area(a, a);
    EXPECT_NEAR(r.area, area(a), 1e-9 * std::max(1.0, area(a)));
    EXPECT_TRUE(testing_support::inside(a.vertices, r.witness));
  }
}

TEST(VerifyLayout, CleanLayout) {
  const Dataset d = squares_dataset(4);
  const std::vector<PlacementRecord> p = {at(0, 0, 0), at(1, 0, 2), at(2, 2, 0)};
  const AuditReport r = verify_layout(p, d, 1.0, 4.0);
  EXPECT_TRUE(r.ok());
  const auto j = nlohmann::json::parse(r.to_json(p));
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_TRUE(j["out_of_strip"].empty());
}

TEST(VerifyLayout, ReportsOverlapAndOutOfStrip) {
  const Dataset d = squares_dataset(4);
  const std::vector<PlacementRecord> p = {at(0, 0, 0), at(1, 1, 1), at(2, 4, 2.5)};
  const AuditReport r = verify_layout(p, d, 1.0, 4.0);
  EXPECT_FALSE(r.ok());
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].first, 0u);
  EXPECT_EQ(r.violations[0].second, 1u);
  EXPECT_NEAR(r.violations[0].area, 1.0, 1e-12);
  EXPECT_EQ(r.out_of_strip, (std::vector<std::size_t>{2}));
  const auto j = nlohmann::json::parse(r.to_json(p));
  EXPECT_FALSE(j["ok"].get<bool>());
  EXPECT_EQ(j["violations"][0]["first"], "sq#0");
  EXPECT_EQ(j["violations"][0]["second"], "sq#1");
  EXPECT_EQ(j["out_of_strip"][0], "sq#2");
}

TEST(VerifyLayout, DuplicatePlacementIsViolation) {
  const Dataset d = squares_dataset(4);
  const std::vector<PlacementRecord> p = {at(0, 3, 1), at(1, 3, 1)};
  EXPECT_EQ(verify_layout(p, d, 1.0, 4.0).violations.size(), 1u);
}

TEST(ReferenceBlf, SimpleCases) {
  const auto sd = semidiscretize(square(0, 0, 2), 0, 1.0, GapClosure::AllInterior);
  StripState s(5.0, 1.0);
  EXPECT_EQ(reference_blf(s, sd), (TranslationVector{0, 0.0}));
  commit(s, sd, {0, 0.0});
  EXPECT_EQ(reference_blf(s, sd), (TranslationVector{0, 2.0}));
  commit(s, sd, {0, 2.0});
  EXPECT_EQ(reference_blf(s, sd), (TranslationVector{2, 0.0}));
}

TEST(ReferenceBlf, AgreesWithPlacement) {
  const auto out = testing_support::oracle_equivalence(17, 200);
  EXPECT_EQ(out.mismatches, 0u) << out.first_failure;
}
