#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "porism/centers.hpp"
#include "porism/poristic.hpp"
#include "random_triangles.hpp"

using namespace porism;
using testing_support::random_triangle;

namespace {

Triangle equilateral(double side, Point c = {0, 0}) {
  const double h = side / std::sqrt(3.0);
  const double pi = std::numbers::pi;
  return Triangle(c + Point{h * std::cos(pi / 2), h * std::sin(pi / 2)},
                  c + Point{h * std::cos(pi / 2 + 2 * pi / 3), h * std::sin(pi / 2 + 2 * pi / 3)},
                  c + Point{h * std::cos(pi / 2 + 4 * pi / 3), h * std::sin(pi / 2 + 4 * pi / 3)});
}

void expect_point_near(Point a, Point b, double tol) {
  EXPECT_NEAR(a.x, b.x, tol);
  EXPECT_NEAR(a.y, b.y, tol);
}

}  // namespace

TEST(SideLengths, Examples) {
  const SideLengths e = side_lengths(equilateral(2.0));
  EXPECT_NEAR(e.s1, 2, 1e-14);
  EXPECT_NEAR(e.s2, 2, 1e-14);
  EXPECT_NEAR(e.s3, 2, 1e-14);
  const SideLengths r = side_lengths(Triangle({0, 0}, {3, 0}, {0, 4}));
  EXPECT_DOUBLE_EQ(r.s1, 5);
  EXPECT_DOUBLE_EQ(r.s2, 4);
  EXPECT_DOUBLE_EQ(r.s3, 3);
}

TEST(SideLengths, PoristicIsoscelesAtZero) {
  const PoristicConfig cfg = config_from_rR(1, 0.36266);
  const auto p = sample_vertices(cfg, 0.0);
  // P1, P2 mirror each other across the x-axis; P3 is the apex
  const SideLengths l = side_lengths(Triangle(p[0], p[1], p[2]));
  EXPECT_NEAR(distance(p[2], p[0]), distance(p[2], p[1]), 1e-14);
  const std::array<double, 3> s{l.s1, l.s2, l.s3};
  int equal_pairs = 0;
  for (int i = 0; i < 3; ++i) equal_pairs += std::abs(s[i] - s[(i + 1) % 3]) < 1e-14;
  EXPECT_EQ(equal_pairs, 1);
}

TEST(Trilinears, NormalizedTriple) {
  const TrilinearTriple f(-3, 0, 4);
  EXPECT_NEAR(f[0], 0.6, 1e-15);
  EXPECT_NEAR(f[2], -0.8, 1e-15);
  EXPECT_THROW(TrilinearTriple(0, 0, 0), Error);
}

TEST(Trilinears, OnesGiveIncenter) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Triangle t = random_triangle(rng);
    expect_point_near(trilinear_to_point(t, {1, 1, 1}), oracle::incenter(t[0], t[1], t[2]), 1e-10);
  }
}

TEST(Trilinears, X100On345LiesOnCircumcircle) {
  const Triangle t({0, 0}, {3, 0}, {0, 4});
  const SideLengths s = side_lengths(t);
  const Point x100 = trilinear_to_point(t, {1 / (s.s2 - s.s3), 1 / (s.s3 - s.s1), 1 / (s.s1 - s.s2)});
  const Point o = oracle::circumcenter(t[0], t[1], t[2]);
  EXPECT_NEAR(distance(x100, o), 2.5, 1e-12);
}

TEST(Barycentric, WeightSumZeroIsAtInfinity) {
  const Triangle t({0, 0}, {1, 0}, {0, 1});
  try {
    barycentric_to_point(t, 1, -2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointAtInfinity);
  }
}

TEST(Centers, EquilateralAllAtCentroid) {
  const Triangle t = equilateral(2.0, {0.3, -0.7});
  for (CenterId id : kAllCenters) {
    if (id == CenterId::X100 || id == CenterId::X1155 || id == CenterId::X11) continue;
    expect_point_near(center(t, id), t.centroid(), 1e-12);
  }
  EXPECT_THROW(center(t, CenterId::X100), Error);
  EXPECT_THROW(center(t, CenterId::X1155), Error);
  // incircle and nine-point circle coincide, so the Feuerbach point is undefined
  EXPECT_THROW(center(t, CenterId::X11), Error);
}

TEST(Centers, AgainstConstructiveOracles) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = random_triangle(rng);
    const Point o = oracle::circumcenter(t[0], t[1], t[2]);
    const Point h = oracle::orthocenter(t[0], t[1], t[2]);
    const double scale = std::max(1.0, norm(o) + norm(h));
    expect_point_near(center(t, CenterId::X3), o, 1e-10 * scale);
    expect_point_near(center(t, CenterId::X4), h, 1e-10 * scale);
    expect_point_near(center(t, CenterId::X5), midpoint(o, h), 1e-10 * scale);
    expect_point_near(center(t, CenterId::X7), oracle::gergonne(t[0], t[1], t[2]), 1e-9 * scale);
    expect_point_near(center(t, CenterId::X40), 2.0 * center(t, CenterId::X3) - center(t, CenterId::X1), 1e-12 * scale);
  }
}

TEST(Centers, X6IsLemoineFromSymmedians) {
  // symmedian through A is the reflection of the median in the bisector
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const Triangle t = random_triangle(rng);
    const Point k = center(t, CenterId::X6);
    for (int v = 0; v < 3; ++v) {
      const Point a = t[v], b = t[(v + 1) % 3], c = t[(v + 2) % 3];
      const Point bis = oracle::unit(oracle::unit(b - a) + oracle::unit(c - a));
      const Point m = midpoint(b, c) - a;
      const Point sym = bis * (2 * dot(m, bis)) - m;
      EXPECT_NEAR(cross(oracle::unit(sym), k - a), 0.0, 1e-9);
    }
  }
}

TEST(Centers, X9IsMittenpunkt) {
  // Mittenpunkt: lines from excenters through the opposite side midpoints concur there
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const Triangle t = random_triangle(rng);
    const Triangle ex = excentral(t);
    const Point m = oracle::meet(ex[0], midpoint(t[1], t[2]) - ex[0], ex[1], midpoint(t[2], t[0]) - ex[1]);
    expect_point_near(center(t, CenterId::X9), m, 1e-9 * std::max(1.0, norm(m)));
  }
}

TEST(Centers, X11OnIncircleAndNinePointCircle) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    const Triangle t = random_triangle(rng);
    const Point f = center(t, CenterId::X11);
    EXPECT_NEAR(distance(f, center(t, CenterId::X1)), inradius(t), 1e-9);
    EXPECT_NEAR(distance(f, center(t, CenterId::X5)), circumradius(t) / 2, 1e-9);
  }
}

TEST(Centers, MedialIncenterIsX10) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = random_triangle(rng);
    expect_point_near(center(medial(t), CenterId::X1), center(t, CenterId::X10), 1e-10);
  }
}

TEST(Centers, X100OnCircumcircle) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = random_triangle(rng, 0.05);
    const double R = circumradius(t);
    EXPECT_NEAR(distance(center(t, CenterId::X100), center(t, CenterId::X3)) / R, 1.0, 1e-9);
  }
}

TEST(Centers, X100RejectsIsosceles) {
  try {
    center(Triangle({-1, 0}, {1, 0}, {0, 3}), CenterId::X100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IsoscelesDegeneracy);
  }
}

TEST(Centers, X1155OnEulerLineOfIncenterAndOnAxis) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = random_triangle(rng);
    const Point x1 = center(t, CenterId::X1), x3 = center(t, CenterId::X3), x40 = center(t, CenterId::X40);
    const Point x1155 = center(t, CenterId::X1155);
    const Line l = Line::through(x1, x3);
    const double scale = std::max({1.0, norm(x1155), norm(x40)});
    EXPECT_NEAR(l.signed_distance(x40), 0.0, 1e-10 * scale);
    EXPECT_NEAR(l.signed_distance(x1155), 0.0, 1e-10 * scale);
    // constructive axis: the three external-bisector feet
    const auto feet = oracle::antiorthic_points(t[0], t[1], t[2]);
    const Line axis = antiorthic_axis(t);
    for (const Point& p : feet) EXPECT_NEAR(axis.signed_distance(p), 0.0, 1e-9 * std::max(1.0, norm(p)));
  }
}

TEST(Centers, IsoscelesX1155IsDefined) {
  const Triangle t({-1, 0}, {1, 0}, {0, 3});
  const Point p = center(t, CenterId::X1155);
  EXPECT_NEAR(p.x, 0.0, 1e-12);
}

TEST(Centers, SimilarityEquivariance) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> ang(-3, 3), sc(0.2, 5), off(-10, 10);
  for (int i = 0; i < 100; ++i) {
    const Triangle t = random_triangle(rng);
    const Similarity s{sc(rng), ang(rng), {off(rng), off(rng)}};
    const Triangle ts = s.apply(t);
    for (CenterId id : kAllCenters) {
      const Point expected = s.apply(center(t, id));
      const Point got = center(ts, id);
      EXPECT_LT(distance(got, expected), 1e-9 * std::max(1.0, norm(expected))) << "X" << static_cast<int>(id);
    }
  }
}

TEST(Centers, NinePointCenterIsMidpoint) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 100; ++i) {
    const Triangle t = random_triangle(rng);
    expect_point_near(center(t, CenterId::X5), midpoint(center(t, CenterId::X3), center(t, CenterId::X4)), 1e-10);
  }
}

TEST(Centers, Registry) {
  EXPECT_EQ(center_id(9), CenterId::X9);
  try {
    center_id(8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedCenter);
  }
}

TEST(Excentral, EquilateralDoubles) {
  const Triangle t = equilateral(1.5, {2, 1});
  const Triangle e = excentral(t);
  const SideLengths s = side_lengths(e);
  EXPECT_NEAR(s.s1, 3, 1e-12);
  EXPECT_NEAR(s.s2, 3, 1e-12);
  EXPECT_NEAR(s.s3, 3, 1e-12);
  expect_point_near(e.centroid(), t.centroid(), 1e-12);
}

TEST(Excentral, OrthocenterIsIncenter) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = random_triangle(rng);
    const Triangle e = excentral(t);
    expect_point_near(oracle::orthocenter(e[0], e[1], e[2]), center(t, CenterId::X1), 1e-10 * std::max(1.0, norm(e[0])));
  }
}

TEST(Excentral, ContainsReference) {
  std::mt19937_64 rng(18);
  for (int i = 0; i < 100; ++i) {
    const Triangle t = random_triangle(rng);
    const Triangle e = excentral(t);
    for (const Point& v : t.vertices()) {
      for (std::size_t k = 0; k < 3; ++k) {
        const Line side = e.side_line(k);
        // v is inside or on each side
        EXPECT_GE(side.signed_distance(v) * side.signed_distance(e[k]), -1e-12);
      }
    }
  }
}

TEST(Excentral, PoristicExcentersOnCircle) {
  const PoristicConfig cfg = config_from_rR(1, 0.36266);
  for (double t : {0.1, 1.0, 2.5, 4.0}) {
    const Triangle e = sample(cfg, t).excentral;
    for (const Point& v : e.vertices()) EXPECT_NEAR(norm(v), 2.0, 1e-12);
  }
}

TEST(Medial, ExampleAndArea) {
  const Triangle t({0, 0}, {2, 0}, {0, 2});
  const Triangle m = medial(t);
  expect_point_near(m[0], {1, 1}, 1e-15);
  expect_point_near(m[1], {0, 1}, 1e-15);
  expect_point_near(m[2], {1, 0}, 1e-15);
  EXPECT_NEAR(m.area(), t.area() / 4, 1e-15);
}

TEST(Obtuse, DotProductTest) {
  EXPECT_TRUE(is_obtuse(Triangle({0, 0}, {4, 0}, {1, 0.5})));
  EXPECT_FALSE(is_obtuse(Triangle({0, 0}, {4, 0}, {2, 3})));
}
