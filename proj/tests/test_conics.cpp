#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "porism/conics.hpp"
#include "porism/poristic.hpp"
#include "random_triangles.hpp"

using namespace porism;
using testing_support::random_triangle;

namespace {

constexpr double kPi = std::numbers::pi;

Line tangent_of_unit_circle(double angle) {
  // x cos a + y sin a = 1
  return Line(std::cos(angle), std::sin(angle), -1.0);
}

Triangle equilateral() { return Triangle({0, 2}, {-std::sqrt(3.0), -1}, {std::sqrt(3.0), -1}); }

}  // namespace

TEST(Circumconic, EquilateralAtCentroidIsCircumcircle) {
  const Triangle t = equilateral();
  const CanonicalConic cc = canonicalize(circumconic_centered(t, t.centroid()));
  EXPECT_EQ(cc.kind, ConicKind::Ellipse);
  EXPECT_NEAR(cc.semi_major, 2.0, 1e-12);
  EXPECT_NEAR(cc.semi_minor, 2.0, 1e-12);
}

TEST(Circumconic, PassesThroughVerticesWithGivenCenter) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> w(0.2, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = random_triangle(rng);
    // interior point by random positive barycentrics
    const Point c = barycentric_to_point(t, w(rng), w(rng), w(rng));
    const CircumconicSolve solve = solve_circumconic_centered(t, c);
    for (const Point& v : t.vertices()) EXPECT_NEAR(conic_eval(solve.conic, v), 0.0, 1e-10);
    const CanonicalConic cc = canonicalize(solve.conic);
    EXPECT_NEAR(distance(cc.center, c), 0.0, 1e-8);
    EXPECT_TRUE(std::isfinite(solve.condition_number));
  }
}

TEST(Circumconic, MittenpunktGivesCircumbilliard) {
  const PoristicConfig cfg = config_from_rR(1, 0.36266);
  for (double t : {0.3, 1.7, 4.1}) {
    const FamilySample s = sample(cfg, t);
    const Point x9 = center(s.triangle, CenterId::X9);
    const ConicMatrix e9 = circumconic_centered(s.triangle, x9);
    for (const Point& v : s.triangle.vertices()) EXPECT_NEAR(conic_eval(e9, v), 0.0, 1e-12);
    EXPECT_NEAR(distance(canonicalize(e9).center, x9), 0.0, 1e-10);
  }
}

TEST(Circumconic, E1SemiAxesAtT09) {
  const PoristicConfig cfg = config_from_rR(1, 0.36266);
  const FamilySample s = sample(cfg, 0.9);
  const CanonicalConic cc = canonicalize(circumconic_centered(s.triangle, center(s.triangle, CenterId::X1)));
  EXPECT_NEAR(cc.semi_major, cfg.R + cfg.d, 1e-9);
  EXPECT_NEAR(cc.semi_minor, cfg.R - cfg.d, 1e-9);
}

TEST(Circumconic, CenterOnSideLineDegenerates) {
  const Triangle t({0, 0}, {4, 0}, {0, 3});
  try {
    circumconic_centered(t, {2, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateConic);
  }
}

TEST(InconicFromTangents, SymmetricTripleIsUnitCircle) {
  const InconicCoefficients k =
      inconic_from_tangents(tangent_of_unit_circle(kPi / 2), tangent_of_unit_circle(7 * kPi / 6),
                            tangent_of_unit_circle(11 * kPi / 6));
  EXPECT_NEAR(k.A, k.C, 1e-12 * std::abs(k.A));
  EXPECT_NEAR(k.B, 0.0, 1e-12 * std::abs(k.A));
  EXPECT_NEAR(k.D / k.A, -1.0, 1e-12);
}

TEST(InconicFromTangents, RotatedTripleKeepsSemiAxes) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> ang(0, 2 * kPi);
  // ellipse x^2/4 + y^2 = 1 has tangent x cos(s)/2 + y sin(s) = 1 at (2cos s, sin s)
  for (int i = 0; i < 50; ++i) {
    const double rot = ang(rng);
    std::array<Line, 3> lines{Line(1, 0, 0), Line(1, 0, 0), Line(1, 0, 0)};
    const std::array<double, 3> params{0.4, 2.3, 4.4};
    for (int j = 0; j < 3; ++j) {
      const double s = params[j];
      // rotate the tangent line by rot about the origin
      const double a = std::cos(s) / 2, b = std::sin(s);
      lines[j] = Line(a * std::cos(rot) - b * std::sin(rot), a * std::sin(rot) + b * std::cos(rot), -1.0);
    }
    const InconicCoefficients k = inconic_from_tangents(lines[0], lines[1], lines[2]);
    if (std::abs(std::sin(2 * rot)) > 1e-3) {
      EXPECT_GT(std::abs(k.B), 1e-6 * std::abs(k.A));
    }
    const CanonicalConic cc = canonicalize(k.matrix());
    EXPECT_NEAR(cc.semi_major, 2.0, 1e-10);
    EXPECT_NEAR(cc.semi_minor, 1.0, 1e-10);
    EXPECT_NEAR(axis_angle_difference(cc.angle, rot), 0.0, 1e-10);
    for (const Line& l : lines) EXPECT_NEAR(k.discriminant(l.a(), l.b(), l.c()), 0.0, 1e-10 * std::abs(k.A * k.C));
  }
}

TEST(InconicFromTangents, ParallelTangentsRejected) {
  try {
    inconic_from_tangents(Line(1, 0, -1), Line(1, 0, 1), Line(0, 1, -1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParallelTangents);
  }
}

TEST(InconicFromTangents, ExcentralSidesMatchImplicitI3x) {
  const PoristicConfig cfg = config_from_rR(1, 0.36266);
  for (double t : {0.2, 0.7, 1.9, 3.3, 5.5}) {
    const auto lines = excentral_side_lines(cfg, t);
    const InconicCoefficients k = inconic_from_tangents(lines[0], lines[1], lines[2]);
    EXPECT_LT(conic_distance(k.matrix(), i3x_implicit(cfg, t)), 1e-9) << "t=" << t;
  }
}

TEST(InconicCentered, IncenterGivesIncircle) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = random_triangle(rng);
    const Inconic ic = inconic_centered(t, oracle::incenter(t[0], t[1], t[2]));
    EXPECT_FALSE(ic.hyperbolic);
    const CanonicalConic cc = canonicalize(ic.conic);
    const double r = inradius(t);
    EXPECT_NEAR(cc.semi_major, r, 1e-10 * std::max(1.0, r));
    EXPECT_NEAR(cc.semi_minor, r, 1e-10 * std::max(1.0, r));
  }
}

TEST(InconicCentered, TangentToAllSides) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> w(0.2, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = random_triangle(rng);
    // centers inside the medial triangle give inellipses
    const Triangle m = medial(t);
    const Point c = barycentric_to_point(m, w(rng), w(rng), w(rng));
    const Inconic ic = inconic_centered(t, c);
    EXPECT_FALSE(ic.hyperbolic);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(tangency_residual(ic.conic, t.side_line(k)), 0.0, 1e-9);
    EXPECT_NEAR(distance(canonicalize(ic.conic).center, c), 0.0, 1e-8);
  }
}

TEST(InconicCentered, OutsideMedialIsHyperbola) {
  const Triangle t({0, 0}, {4, 0}, {0, 3});
  // beyond a medial side line but not in an excircle region
  const Inconic ic = inconic_centered(t, {-1, -1});
  EXPECT_TRUE(ic.hyperbolic);
  EXPECT_EQ(canonicalize(ic.conic).kind, ConicKind::Hyperbola);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(tangency_residual(ic.conic, t.side_line(k)), 0.0, 1e-9);
}

TEST(InconicCentered, ExcenterGivesExcircle) {
  const Triangle t({0, 0}, {4, 0}, {0, 3});
  const Triangle ex = excentral(t);
  const Inconic ic = inconic_centered(t, ex[0]);
  EXPECT_FALSE(ic.hyperbolic);
  const CanonicalConic cc = canonicalize(ic.conic);
  const double ra = std::abs(t.side_line(0).signed_distance(ex[0]));
  EXPECT_NEAR(cc.semi_major, ra, 1e-10);
  EXPECT_NEAR(cc.semi_minor, ra, 1e-10);
}

TEST(InconicCentered, ExcentralMacBeathIsStationary) {
  const PoristicConfig cfg = config_from_rR(1, 0.36266);
  for (double t : {0.1, 1.3, 2.9, 4.6}) {
    const FamilySample s = sample(cfg, t);
    const Point x5x = center(s.excentral, CenterId::X5);
    EXPECT_NEAR(distance(x5x, cfg.x3()), 0.0, 1e-12);
    const CanonicalConic cc = canonicalize(inconic_centered(s.excentral, x5x).conic);
    EXPECT_NEAR(cc.center.x, cfg.d, 1e-10);
    EXPECT_NEAR(cc.center.y, 0.0, 1e-10);
    EXPECT_NEAR(cc.semi_major, cfg.R, 1e-9);
    EXPECT_NEAR(cc.semi_minor, std::sqrt(cfg.R * cfg.R - cfg.d * cfg.d), 1e-9);
  }
}

TEST(InconicCentered, ExcentralBevanInconic) {
  const PoristicConfig cfg = config_from_rR(1, 0.36266);
  for (double t : {0.1, 1.3, 2.9, 4.6}) {
    const FamilySample s = sample(cfg, t);
    const CanonicalConic cc = canonicalize(inconic_centered(s.excentral, cfg.x40()).conic);
    EXPECT_NEAR(cc.semi_major, cfg.R + cfg.d, 1e-9);
    EXPECT_NEAR(cc.semi_minor, cfg.R - cfg.d, 1e-9);
  }
}

TEST(Brianchon, IncenterWeightsGiveGergonne) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = random_triangle(rng);
    // X1 has barycentrics (s1 : s2 : s3)
    const Point p = brianchon_point(t, [](double s1, double, double) { return s1; });
    EXPECT_LT(distance(p, oracle::gergonne(t[0], t[1], t[2])), 1e-10 * std::max(1.0, norm(p)));
  }
}

TEST(Brianchon, CeviansMeetTangencyPoints) {
  std::mt19937_64 rng(26);
  const std::vector<std::function<double(double, double, double)>> weights{
      [](double, double s2, double s3) { return s2 * s3; },
      [](double s1, double, double) { return s1 * s1; },
      [](double s1, double s2, double s3) { return s1 * (s2 + s3); },
  };
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const Triangle t = random_triangle(rng);
    const SideLengths s = side_lengths(t);
    for (const auto& g : weights) {
      const Point c = barycentric_to_point(t, g(s.s1, s.s2, s.s3), g(s.s2, s.s3, s.s1), g(s.s3, s.s1, s.s2));
      Point b;
      try {
        b = brianchon_point(t, g);
      } catch (const Error&) {
        continue;
      }
      const ConicMatrix m = inconic_centered(t, c).conic;
      for (std::size_t k = 0; k < 3; ++k) {
        // pole of a tangent line is its contact point
        const Eigen::Vector3d h = m.adjugate() * t.side_line(k).homogeneous();
        const Point contact{h(0) / h(2), h(1) / h(2)};
        const Point dir = oracle::unit(contact - t[k]);
        EXPECT_NEAR(cross(dir, b - t[k]), 0.0, 1e-9 * std::max(1.0, norm(b - t[k])));
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 250);
}

TEST(Brianchon, IncircleExampleFromProductWeights) {
  // g = s2 s3 is the X75-centered inconic, not the incircle; its perspector differs from X7
  const Triangle t({0, 0}, {4, 0}, {0, 3});
  const Point p = brianchon_point(t, [](double, double s2, double s3) { return s2 * s3; });
  EXPECT_GT(distance(p, oracle::gergonne(t[0], t[1], t[2])), 1e-3);
}

TEST(Brianchon, EquilateralGivesCentroid) {
  const Triangle t = equilateral();
  const Point p = brianchon_point(t, [](double s1, double s2, double s3) { return s1 + 2 * s2 * s3; });
  EXPECT_NEAR(distance(p, t.centroid()), 0.0, 1e-12);
}

TEST(Brianchon, VanishingDenominator) {
  const Triangle t({0, 0}, {4, 0}, {0, 3});
  // g2 + g3 - g1 = 16 + 9 - 25 = 0 for g = s1^2 on the right angle
  try {
    brianchon_point(t, [](double s1, double, double) { return s1 * s1; });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PerspectorAtInfinity);
  }
}

TEST(HyperbolaFocalLength, FeuerbachCircumhyperbola) {
  const PoristicConfig cfg = config_from_rR(1, 0.36266);
  const FamilySample s = sample(cfg, 1.1);
  const Point x11 = center(s.triangle, CenterId::X11);
  const ConicMatrix h = circumconic_centered(s.triangle, x11);
  EXPECT_EQ(canonicalize(h).kind, ConicKind::Hyperbola);
  const auto [f1, f2] = foci(canonicalize(h));
  EXPECT_NEAR(hyperbola_focal_length(s.triangle, x11), distance(f1, f2), 1e-12);
  // |PF1 - PF2| = 2a on every vertex
  const double two_a = 2 * canonicalize(h).semi_major;
  for (const Point& v : s.triangle.vertices()) EXPECT_NEAR(std::abs(distance(v, f1) - distance(v, f2)), two_a, 1e-9);
}

TEST(HyperbolaFocalLength, EllipseRejected) {
  const Triangle t = equilateral();
  try {
    hyperbola_focal_length(t, t.centroid());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAHyperbola);
  }
}
