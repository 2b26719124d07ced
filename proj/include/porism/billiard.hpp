#pragma once

// Elliptic-billiard side of the Poristic family: the rho(a, b) map, the
// caustic, the normalized circumbilliard, the similarity that carries a
// Poristic triangle onto a fixed billiard, and the focal-locus circle.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "porism/poristic.hpp"

namespace porism {

struct BilliardConfig {
  double a = 1.0;
  double b = 1.0;
  double delta = 1.0;  ///< sqrt(a^4 - a^2 b^2 + b^4)
  double c2 = 0.0;     ///< a^2 - b^2
};

inline BilliardConfig make_billiard(double a, double b) {
  if (!(b > 0.0) || !(a >= b) || !std::isfinite(a)) throw Error(ErrorCode::InvalidConfig, "need a >= b > 0");
  return {a, b, std::sqrt(a * a * a * a - a * a * b * b + b * b * b * b), a * a - b * b};
}

/// r/R of the Poristic family whose circumbilliard has the shape of this billiard.
inline double billiard_rho(const BilliardConfig& cfg) {
  if (cfg.c2 <= tol::kCircular * cfg.a * cfg.a) return 0.5;
  const double b2 = cfg.b * cfg.b, a2 = cfg.a * cfg.a;
  return 2 * (cfg.delta - b2) * (a2 - cfg.delta) / (cfg.c2 * cfg.c2);
}

struct Axes {
  double major = 0.0;
  double minor = 0.0;
};

/// Semi-axes of the confocal caustic of the 3-periodic family.
inline Axes caustic_axes(const BilliardConfig& cfg) {
  if (cfg.c2 <= tol::kCircular * cfg.a * cfg.a) throw Error(ErrorCode::CircularBilliard, "caustic of a circular billiard");
  const double b2 = cfg.b * cfg.b, a2 = cfg.a * cfg.a;
  return {cfg.a * (cfg.delta - b2) / cfg.c2, cfg.b * (a2 - cfg.delta) / cfg.c2};
}

struct CircumbilliardAxes {
  double a9 = 0.0;  ///< major semi-axis over perimeter
  double b9 = 0.0;  ///< minor semi-axis over perimeter
  double c9 = 0.0;  ///< focal half-distance over perimeter
};

/// Circumbilliard semi-axes of a unit-perimeter Poristic triangle.
inline CircumbilliardAxes cb_axes_normalized(double rho) {
  if (!(rho > 0.0) || rho > 0.5) throw Error(ErrorCode::InvalidRatio, "rho must lie in (0, 1/2]");
  const double s = rho == 0.5 ? 0.0 : std::sqrt(1 - 2 * rho);
  const double den = 2 * rho + 8;
  const double a9 = std::sqrt(2.0) * std::sqrt(rho + 1 + s) / den;
  const double b9 = std::sqrt(2.0) * std::sqrt(rho + 1 - s) / den;
  return {a9, b9, std::sqrt(std::max(a9 * a9 - b9 * b9, 0.0))};
}

/// a9 / b9 as a function of rho alone.
inline double cb_aspect_ratio(double rho) {
  if (!(rho > 0.0) || rho > 0.5) throw Error(ErrorCode::InvalidRatio, "rho must lie in (0, 1/2]");
  const double s = rho == 0.5 ? 0.0 : std::sqrt(1 - 2 * rho);
  return std::sqrt((rho * rho + 2 * (rho + 1) * s + 2) / (rho * (rho + 4)));
}

/// x = L (Rot(theta) u + X9): maps the fixed unit-perimeter billiard onto sample t.
struct SimilarityParams {
  double scale = 1.0;
  double angle = 0.0;
  Point translation;

  /// Billiard frame to Poristic frame.
  Similarity forward() const { return Similarity{scale, angle, translation}; }
  /// Poristic frame to billiard frame.
  Similarity backward() const { return forward().inverse(); }
};

/// Similarity parameters built from the sample itself: vertex-sum perimeter,
/// constructed X9 and the major-axis direction of the constructed E9.
inline SimilarityParams similarity_params(const FamilySample& s) {
  const ConicMatrix e9 = named_conic(s, ConicTag::E9);
  const CanonicalConic cc = canonicalize(e9);
  return {s.perimeter, cc.angle, cc.center};
}

inline Triangle normalize_sample(const SimilarityParams& p, const FamilySample& s) {
  if (!(p.scale > 0.0)) throw Error(ErrorCode::InvalidConfig, "similarity scale must be positive");
  const Similarity back = p.backward();
  return Triangle(back.apply(s.triangle[0]), back.apply(s.triangle[1]), back.apply(s.triangle[2]));
}

inline Triangle normalize_sample(const PoristicConfig&, const FamilySample& s) {
  return normalize_sample(similarity_params(s), s);
}

/// u^2/a^2 + v^2/b^2 - 1.
inline double ellipse_residual(Point p, double a, double b) { return p.x * p.x / (a * a) + p.y * p.y / (b * b) - 1.0; }

/// Largest difference, in radians, between incoming and outgoing chord angles
/// against the tangent of the axis-aligned ellipse (a, b) at each vertex.
inline double reflection_law_defect(const Triangle& t, double a, double b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Point p = t[i];
    const Point n{p.x / (a * a), p.y / (b * b)};
    const Point tangent = Point{-n.y, n.x} / norm(n);
    const Point u = (t[(i + 1) % 3] - p) / distance(t[(i + 1) % 3], p);
    const Point w = (t[(i + 2) % 3] - p) / distance(t[(i + 2) % 3], p);
    // equal angles with the tangent line, measured from opposite tangent directions
    const double au = std::acos(std::clamp(dot(u, tangent), -1.0, 1.0));
    const double aw = std::acos(std::clamp(dot(w, -tangent), -1.0, 1.0));
    worst = std::max(worst, std::abs(au - aw));
  }
  return worst;
}

struct FociLocus {
  Point center;            ///< X40 frame
  double radius = 0.0;     ///< radius traced by the circumbilliard foci
  double printed_radius = 0.0;  ///< 4d(R-d)sqrt(dR) / ((3R-d) sqrt((3R-d)(R+d)))
};

/// Circle on which the circumbilliard foci move.
inline FociLocus foci_locus_check(const PoristicConfig& cfg) {
  const double R = cfg.R, d = cfg.d;
  const Point c = from_circumcenter_frame(cfg, {(R - d) * d / (3 * R + d), 0.0});
  if (d < 1e-12 * R) return {c, 0.0, 0.0};
  const double radius = 2 * std::sqrt(d * R) * std::sqrt((3 * R - d) * (R + d)) / (3 * R + d);
  const double printed = 4 * d * (R - d) * std::sqrt(d * R) / ((3 * R - d) * std::sqrt((3 * R - d) * (R + d)));
  return {c, radius, printed};
}

/// Ratio of focal lengths of the excentral circumhyperbola centered on X100
/// and the reference Feuerbach circumhyperbola (centered on X11).
inline double focal_length_ratio(const FamilySample& s) {
  const double gamma = hyperbola_focal_length(s.triangle, center(s.triangle, CenterId::X11));
  const double gamma_x = hyperbola_focal_length(s.excentral, center(s.triangle, CenterId::X100));
  return gamma_x / gamma;
}

struct CrossCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;

  double rel_diff() const { return std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs)); }
};

/// Billiard-side (a, b) forms of aspect-ratio invariants against their rho forms.
inline std::vector<CrossCheck> billiard_cross_checks(const BilliardConfig& cfg) {
  const double a = cfg.a, b = cfg.b, dl = cfg.delta, a2 = a * a, b2 = b * b;
  const double rho = billiard_rho(cfg);
  const double s = rho == 0.5 ? 0.0 : std::sqrt(1 - 2 * rho);
  const double d = s;  // R = 1
  const double x3_ab = std::sqrt(2 * dl * (dl + a2 - b2) - a2 * b2) / b2;
  const double x3_rho = (1 + s) / rho - 1;
  const double x5_a = (b2 + dl) * std::sqrt(dl + a2 - b2) / (2 * b * a2);
  const double x5_b = (a2 + dl) * std::sqrt(dl + b2 - a2) / (2 * a * b2);
  const double x5_rho = 1 / std::sqrt(2 * rho);
  const double e6_ab = a * (a2 + dl) / (b * (b2 + dl));
  const double e6_rho = std::sqrt((1 + d) * (3 + d) / ((3 - d) * (1 - d)));
  return {{"excIncX3", x3_ab, x3_rho},
          {"excIncX3_axis_ratio", std::sqrt(2 * dl * dl + 2 * (a2 - b2) * dl - a2 * b2) / b2, (1 + d) / (1 - d)},
          {"excIncX5_forms", x5_a, x5_b},
          {"excIncX5_rho", x5_a, x5_rho},
          {"E6x_aspect", e6_ab, e6_rho},
          {"cb_aspect", cb_aspect_ratio(rho), a / b}};
}

}  // namespace porism
