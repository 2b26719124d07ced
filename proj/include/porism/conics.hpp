#pragma once

// Circumconics with a prescribed center, inconics from three tangents with a
// prescribed center, and the Brianchon perspector of an inconic.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>

#include <Eigen/SVD>

#include "porism/centers.hpp"
#include "porism/geom.hpp"

namespace porism {

struct CircumconicSolve {
  ConicMatrix conic;
  /// sigma_max / sigma_5 of the (conditioned) 5x6 constraint matrix.
  double condition_number;
};

/// Unique conic through the three vertices whose center is `c`, with solver diagnostics.
inline CircumconicSolve solve_circumconic_centered(const Triangle& t, Point c) {
  // work in a frame centered at c and scaled to unit size, then map back
  double scale = 0.0;
  for (const Point& v : t.vertices()) scale = std::max(scale, distance(v, c));

  Eigen::Matrix<double, 5, 6> a;
  for (int i = 0; i < 3; ++i) {
    const Point p = (t[i] - c) / scale;
    a.row(i) << p.x * p.x, 2 * p.x * p.y, p.y * p.y, 2 * p.x, 2 * p.y, 1.0;
  }
  // gradient vanishes at the local origin: D = 0, E = 0
  a.row(3) << 0, 0, 0, 1, 0, 0;
  a.row(4) << 0, 0, 0, 0, 1, 0;

  Eigen::JacobiSVD<Eigen::Matrix<double, 5, 6>> svd(a, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cond = sigma(4) > 0.0 ? sigma(0) / sigma(4) : INFINITY;
  if (!(sigma(4) > 1e-12 * sigma(0))) {
    throw Error(ErrorCode::DegenerateConic, "circumconic constraints have rank < 5");
  }
  const Eigen::Matrix<double, 6, 1> v = svd.matrixV().col(5);
  Eigen::Matrix3d local;
  local << v(0), v(1), v(3), v(1), v(2), v(4), v(3), v(4), v(5);

  // local point q = (p - c) / scale
  Eigen::Matrix3d h;
  h << 1 / scale, 0, -c.x / scale, 0, 1 / scale, -c.y / scale, 0, 0, 1;
  ConicMatrix conic(h.transpose() * local * h);
  if (std::abs(conic.determinant()) < tol::kConic) {
    throw Error(ErrorCode::DegenerateConic, "circumconic degenerates (center on a side line?)");
  }
  return {conic, cond};
}

inline ConicMatrix circumconic_centered(const Triangle& t, Point c) { return solve_circumconic_centered(t, c).conic; }

/// Origin-centered conic A x^2 + 2B xy + C y^2 + D = 0.
struct InconicCoefficients {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
  /// D taken from the tangency discriminant because the closed form disagreed by > 1e-9 relative.
  bool d_from_discriminant = false;

  ConicMatrix matrix() const { return ConicMatrix::from_coefficients(A, B, C, 0.0, 0.0, D); }

  /// (AC - B^2) c^2 + (A b^2 - 2B ab + C a^2) D for the line a x + b y + c = 0.
  double discriminant(double a, double b, double c) const {
    return (A * C - B * B) * c * c + (A * b * b - 2 * B * a * b + C * a * a) * D;
  }
};

/// Coefficients of the origin-centered conic tangent to three lines, from the
/// explicit polynomials in a_i, b_i, c_i and delta_ij = a_i b_j - a_j b_i.
inline InconicCoefficients inconic_from_tangents(const Line& l1, const Line& l2, const Line& l3) {
  const double a1 = l1.a(), b1 = l1.b(), c1 = l1.c();
  const double a2 = l2.a(), b2 = l2.b(), c2 = l2.c();
  const double a3 = l3.a(), b3 = l3.b(), c3 = l3.c();
  const double d12 = a1 * b2 - a2 * b1;
  const double d13 = a1 * b3 - a3 * b1;
  const double d23 = a2 * b3 - a3 * b2;
  if (std::min({std::abs(d12), std::abs(d13), std::abs(d23)}) < 1e-12) {
    throw Error(ErrorCode::ParallelTangents, "two tangent lines are parallel");
  }

  InconicCoefficients k;
  k.A = a2 * a3 * c1 * c1 * d23 - a1 * a3 * c2 * c2 * d13 + a1 * a2 * c3 * c3 * d12;
  k.B = 0.5 * ((a2 * b3 + a3 * b2) * c1 * c1 * d23 - (a1 * b3 + a3 * b1) * c2 * c2 * d13 +
               (a1 * b2 + a2 * b1) * c3 * c3 * d12);
  k.C = b2 * b3 * c1 * c1 * d23 - b1 * b3 * c2 * c2 * d13 + b1 * b2 * c3 * c3 * d12;
  const double u = d23 * c1, v = d13 * c2, w = d12 * c3;
  k.D = 0.25 / (d12 * d13 * d23) * (u + v - w) * (u - v - w) * (u - v + w) * (u + v + w);

  // the closed form is sign-sensitive to line normalization; cross-check it
  // against the tangency discriminant solved on the best-conditioned line
  const std::array<std::array<double, 3>, 3> lines{{{a1, b1, c1}, {a2, b2, c2}, {a3, b3, c3}}};
  double best_den = 0.0, d_disc = 0.0;
  for (const auto& l : lines) {
    const double den = k.A * l[1] * l[1] - 2 * k.B * l[0] * l[1] + k.C * l[0] * l[0];
    if (std::abs(den) > std::abs(best_den)) {
      best_den = den;
      d_disc = -(k.A * k.C - k.B * k.B) * l[2] * l[2] / den;
    }
  }
  if (best_den != 0.0 && std::abs(d_disc - k.D) > 1e-9 * std::max(std::abs(d_disc), std::abs(k.D))) {
    k.D = d_disc;
    k.d_from_discriminant = true;
  }
  return k;
}

struct Inconic {
  ConicMatrix conic;
  /// The center lies outside the ellipse regions, so the tangent conic is a hyperbola.
  bool hyperbolic = false;
  bool d_from_discriminant = false;
};

/// Conic tangent to the three side lines of t with center c.
inline Inconic inconic_centered(const Triangle& t, Point c) {
  std::array<Line, 3> local{t.side_line(0), t.side_line(1), t.side_line(2)};
  for (Line& l : local) {
    // a x + b y + c = 0 with x = x' + c.x becomes a x' + b y' + (c + a c.x + b c.y) = 0
    l = Line(l.a(), l.b(), l.signed_distance(c));
  }
  const InconicCoefficients k = inconic_from_tangents(local[0], local[1], local[2]);
  ConicMatrix conic = k.matrix().translated(c);
  const bool hyperbolic = (k.A * k.C - k.B * k.B) < 0.0;
  return {conic, hyperbolic, k.d_from_discriminant};
}

/// Perspector of the inconic whose center has barycentrics g(s1,s2,s3) (cyclic).
template <class G>
  requires std::invocable<G, double, double, double>
Point brianchon_point(const Triangle& t, G&& g) {
  const SideLengths s = side_lengths(t);
  const double g1 = g(s.s1, s.s2, s.s3);
  const double g2 = g(s.s2, s.s3, s.s1);
  const double g3 = g(s.s3, s.s1, s.s2);
  const std::array<double, 3> den{g2 + g3 - g1, g3 + g1 - g2, g1 + g2 - g3};
  const double mag = std::abs(g1) + std::abs(g2) + std::abs(g3);
  for (double d : den) {
    if (std::abs(d) < 1e-12 * mag) throw Error(ErrorCode::PerspectorAtInfinity, "perspector denominator vanishes");
  }
  try {
    return barycentric_to_point(t, 1 / den[0], 1 / den[1], 1 / den[2]);
  } catch (const Error&) {
    throw Error(ErrorCode::PerspectorAtInfinity, "perspector weights sum to zero");
  }
}

/// Distance between the foci of the circumhyperbola of t centered at c.
inline double hyperbola_focal_length(const Triangle& t, Point c) {
  const CanonicalConic cc = canonicalize(circumconic_centered(t, c));
  if (cc.kind != ConicKind::Hyperbola) throw Error(ErrorCode::NotAHyperbola, std::string(to_string(cc.kind)));
  return 2.0 * cc.focal_half_distance();
}

}  // namespace porism
