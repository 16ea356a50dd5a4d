#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "seminest/geometry.hpp"
#include "testing.hpp"

using namespace seminest;

namespace {

Polygon poly(std::initializer_list<Point> pts) { return Polygon{std::vector<Point>(pts)}; }

const Polygon kNotched = poly({{0, 1}, {1.5, -1}, {2, 0}, {5, 0}, {2.5, 1}, {5, 2}, {2, 2}, {2, 3}});

}  // namespace

TEST(Geometry, NormalizeTranslatesSquare) {
  const Polygon p = validate_and_normalize(poly({{1, 1}, {5, 1}, {5, 5}, {1, 5}}));
  EXPECT_EQ(p, poly({{0, 0}, {4, 0}, {4, 4}, {0, 4}}));
}

TEST(Geometry, NormalizeFlipsClockwise) {
  const Polygon p = validate_and_normalize(poly({{0, 0}, {0, 3}, {3, 0}}));
  EXPECT_GT(signed_area(p), 0.0);
  EXPECT_DOUBLE_EQ(area(p), 4.5);
  EXPECT_EQ(p.size(), 3u);
}

TEST(Geometry, BowTieRejected) {
  try {
    validate_and_normalize(poly({{0, 0}, {2, 2}, {2, 0}, {0, 2}}));
    FAIL() << "bow-tie accepted";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), GeometryErrorKind::SelfIntersecting);
  }
}

TEST(Geometry, OtherErrors) {
  auto kind_of = [](const Polygon& p) {
    try {
      validate_and_normalize(p);
    } catch (const GeometryError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  EXPECT_EQ(kind_of(poly({{0, 0}, {1, 1}})), static_cast<int>(GeometryErrorKind::TooFewVertices));
  EXPECT_EQ(kind_of(poly({{0, 0}, {1, 1}, {2, 2}})), static_cast<int>(GeometryErrorKind::DegenerateArea));
  EXPECT_EQ(kind_of(poly({{0, 0}, {NAN, 1}, {2, 0}})), static_cast<int>(GeometryErrorKind::NonFinite));
}

TEST(Geometry, CollinearVerticesMerged) {
  const Polygon p = validate_and_normalize(poly({{0, 0}, {2, 0}, {4, 0}, {4, 4}, {0, 4}}));
  EXPECT_EQ(p.size(), 4u);
}

TEST(Geometry, AreaExamples) {
  EXPECT_DOUBLE_EQ(area(poly({{0, 0}, {4, 0}, {4, 4}, {0, 4}})), 16.0);
  EXPECT_DOUBLE_EQ(area(poly({{0, 0}, {3, 0}, {0, 3}})), 4.5);
  // Shoelace by hand: terms -1.5, 2, 0, 5, 0, 6, 2, 2.
  EXPECT_DOUBLE_EQ(area(kNotched), 7.75);
}

TEST(Geometry, AabbExamples) {
  const Aabb sq = aabb(poly({{0, 0}, {4, 0}, {4, 4}, {0, 4}}));
  EXPECT_DOUBLE_EQ(sq.width(), 4.0);
  EXPECT_DOUBLE_EQ(sq.height(), 4.0);
  const Aabb r = aabb(rotate(poly({{0, 0}, {4, 0}, {4, 2}, {0, 2}}), 90));
  EXPECT_DOUBLE_EQ(r.width(), 2.0);
  EXPECT_DOUBLE_EQ(r.height(), 4.0);
  const Aabb f = aabb(kNotched);
  EXPECT_DOUBLE_EQ(f.width(), 5.0);
  EXPECT_DOUBLE_EQ(f.height(), 4.0);
}

TEST(Geometry, RotateExamples) {
  const Polygon sq = validate_and_normalize(poly({{0, 0}, {4, 0}, {4, 4}, {0, 4}}));
  EXPECT_EQ(rotate(sq, 0), sq);
  const Polygon full = rotate(sq, 360);
  for (std::size_t i = 0; i < sq.size(); ++i) {
    EXPECT_NEAR(full[i].x, sq[i].x, 1e-9);
    EXPECT_NEAR(full[i].y, sq[i].y, 1e-9);
  }
  const Polygon r = rotate(validate_and_normalize(poly({{0, 0}, {4, 0}, {4, 2}, {0, 2}})), 90);
  const Aabb b = bounds(r);
  EXPECT_EQ(b.min_x, 0.0);
  EXPECT_EQ(b.min_y, 0.0);
  EXPECT_EQ(b.max_x, 2.0);
  EXPECT_EQ(b.max_y, 4.0);
}

TEST(Geometry, VertexKinds) {
  const Polygon sq = validate_and_normalize(poly({{0, 0}, {4, 0}, {4, 4}, {0, 4}}));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(vertex_kind(sq, i), VertexKind::Convex);
  // L-shaped notch: the inner corner is reflex.
  const Polygon l{{{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}}};
  EXPECT_EQ(vertex_kind(l, 3), VertexKind::Reflex);
  const Polygon straight{{{0, 0}, {2, 0}, {4, 0}, {4, 4}}};
  EXPECT_EQ(vertex_kind(straight, 1), VertexKind::Straight);
}

TEST(Geometry, SegmentsIntersect) {
  EXPECT_TRUE(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  EXPECT_FALSE(segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
}

TEST(GeometryProperty, RotationPreservesArea) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> th(0, 360);
  for (int k = 0; k < 500; ++k) {
    const Polygon p = validate_and_normalize(testing_support::random_star(rng, 7, 5.0));
    const double a = area(p);
    EXPECT_NEAR(area(rotate(p, th(rng))), a, 1e-9 * a);
  }
}

TEST(GeometryProperty, NormalizeIdempotent) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 300; ++k) {
    const Polygon p = validate_and_normalize(testing_support::random_star(rng, 8, 3.0));
    EXPECT_EQ(validate_and_normalize(p), p);
  }
}

TEST(GeometryProperty, ExteriorTurnsSumToFullTurn) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 300; ++k) {
    const Polygon p = validate_and_normalize(testing_support::random_star(rng, 9, 3.0));
    double sum = 0.0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = p[(i + n - 1) % n];
      const Point& b = p[i];
      const Point& c = p[(i + 1) % n];
      const double t1 = std::atan2(b.y - a.y, b.x - a.x);
      const double t2 = std::atan2(c.y - b.y, c.x - b.x);
      double d = t2 - t1;
      while (d <= -M_PI) d += 2 * M_PI;
      while (d > M_PI) d -= 2 * M_PI;
      sum += d;
    }
    EXPECT_NEAR(sum * 180.0 / M_PI, 360.0, 1e-6);
  }
}
