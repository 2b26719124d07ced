#pragma once

// The Poristic triangle family: triangles sharing a fixed incircle and
// circumcircle, with its closed-form scalars, stationary objects, and the
// named circum-/inconics built on it.
//
// Canonical frame: origin at X40, X3 = (d, 0), X1 = (2d, 0). Closed forms
// that are naturally stated with the origin at X3 go through the explicit
// frame helpers below.

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>

#include "porism/centers.hpp"
#include "porism/conics.hpp"
#include "porism/geom.hpp"

namespace porism {

struct PoristicConfig {
  double R = 1.0;    ///< circumradius
  double r = 0.5;    ///< inradius
  double d = 0.0;    ///< |X1 X3|
  double rho = 0.5;  ///< r / R

  Point x40() const { return {0.0, 0.0}; }
  Point x3() const { return {d, 0.0}; }
  Point x1() const { return {2.0 * d, 0.0}; }

  Circle circumcircle() const { return {x3(), R}; }
  Circle incircle() const { return {x1(), r}; }
  /// Locus of the excenters.
  Circle excenter_circle() const { return {x40(), 2.0 * R}; }
};

/// Euler: d = sqrt(R (R - 2r)).
inline PoristicConfig config_from_rR(double R, double r) {
  if (!(R > 0.0) || !std::isfinite(R)) throw Error(ErrorCode::InvalidRatio, "R must be positive");
  if (!(r > 0.0) || r > R / 2) throw Error(ErrorCode::InvalidRatio, "need 0 < r <= R/2");
  const double d2 = R * (R - 2.0 * r);
  return {R, r, std::sqrt(std::max(d2, 0.0)), r / R};
}

inline PoristicConfig config_from_rho(double rho, double R = 1.0) {
  if (!(rho > 0.0) || rho > 0.5) throw Error(ErrorCode::InvalidRatio, "rho must lie in (0, 1/2]");
  return config_from_rR(R, rho * R);
}

/// Shifts from the X3-origin frame into the canonical X40 frame.
inline Point from_circumcenter_frame(const PoristicConfig& cfg, Point p) { return {p.x + cfg.d, p.y}; }
inline Point to_circumcenter_frame(const PoristicConfig& cfg, Point p) { return {p.x - cfg.d, p.y}; }

struct FamilySample {
  double t = 0.0;
  Triangle triangle;
  Triangle excentral;
  double omega = 0.0;
  double perimeter = 0.0;
};

inline double sample_omega(const PoristicConfig& cfg, double t) {
  const double k = cfg.d * std::cos(t) + cfg.r;
  return std::sqrt(cfg.R * cfg.R - k * k);
}

/// Vertices P1, P2, P3 parametrized by the incircle tangency point of side P1P2 at angle t.
inline std::array<Point, 3> sample_vertices(const PoristicConfig& cfg, double t) {
  const double R = cfg.R, d = cfg.d, r = cfg.r;
  const double ct = std::cos(t), st = std::sin(t);
  const double w = sample_omega(cfg, t);
  const double k = d * ct + r;
  const Point p1{ct * k - w * st + d, k * st + w * ct};
  const Point p2{ct * k + w * st + d, k * st - w * ct};
  const double den = R * R - 2 * d * R * ct + d * d;
  const Point p3{R * (2 * d * R - (R * R + d * d) * ct) / den + d, R * (d * d - R * R) * st / den};
  return {p1, p2, p3};
}

inline FamilySample sample(const PoristicConfig& cfg, double t) {
  const auto v = sample_vertices(cfg, t);
  Triangle tri(v[0], v[1], v[2]);
  const SideLengths s = side_lengths(tri);
  return {t, tri, porism::excentral(tri), sample_omega(cfg, t), s.perimeter()};
}

/// Perimeter L(t) in closed form.
inline double perimeter_closed_form(const PoristicConfig& cfg, double t) {
  const double R = cfg.R, d = cfg.d, ct = std::cos(t);
  return (3 * R * R - 4 * d * R * ct + d * d) * std::sqrt(3 * R * R + 2 * d * R * ct - d * d) /
         (R * std::sqrt(R * R - 2 * d * R * ct + d * d));
}

/// Mittenpunkt X9(t) in closed form, returned in the X40 frame. The printed
/// form is stated with the origin at X3 and uses r = (R^2 - d^2) / (2R).
inline Point x9_closed_form(const PoristicConfig& cfg, double t) {
  const double R = cfg.R, d = cfg.d, ct = std::cos(t), st = std::sin(t);
  const double r = (R * R - d * d) / (2 * R);
  const double x = d * (4 * d * ct * ct * (R * ct - d) - r * (3 * d * ct + R) - r * r) /
                   ((4 * R + r) * (d * ct - R + r));
  const double y = 4 * R * d * d * st * (R * R - (2 * R * ct - d) * (2 * R * ct - d)) /
                   ((R * R + d * d - 2 * d * R * ct) * (9 * R * R - d * d));
  return from_circumcenter_frame(cfg, {x, y});
}

/// Circumbilliard rotation angle from the printed tan(theta) expression,
/// assembled with atan2 and folded into (-pi/2, pi/2]. This form does not
/// reproduce the constructed circumbilliard axis; callers validate it before use.
inline double theta_closed_form(const PoristicConfig& cfg, double t) {
  const double R = cfg.R, d = cfg.d, ct = std::cos(t), st = std::sin(t);
  const double num = (1 - ct) * (R + d - 2 * R * ct);
  const double den = (2 * R * ct + R - d) * st;
  return fold_axis_angle(std::atan2(num, den));
}

/// Counter-clockwise direction of the axes shared by I3', E1 and E9, from the
/// double-angle rotation that diagonalizes I3'. Determined modulo pi/2.
inline double axis_angle_double_angle_form(const PoristicConfig& cfg, double t) {
  const double R = cfg.R, d = cfg.d, ct = std::cos(t), st = std::sin(t);
  const double q = 2 * R * ct - d;
  const double num = st * (R * R - q * q);
  const double den = ct * (q * q - 3 * R * R) + 2 * d * R;
  // the printed rotation is clockwise
  return fold_axis_angle(0.5 * std::atan2(-num, den));
}

/// Circle traced by X9(t), in the X40 frame.
inline Circle x9_locus(const PoristicConfig& cfg) {
  const double R = cfg.R, d = cfg.d;
  const double denom = 9 * R * R - d * d;
  if (d < 1e-12 * R) throw Error(ErrorCode::AxisAtInfinity, "X9 locus degenerates to a point when d = 0");
  return {from_circumcenter_frame(cfg, {d * (3 * R * R + d * d) / denom, 0.0}), 4 * R * d * d / denom};
}

/// Side lines of the excentral triangle in closed form: the external bisectors at P2, P1 and P3, in that order.
inline std::array<Line, 3> excentral_side_lines(const PoristicConfig& cfg, double t) {
  const double R = cfg.R, d = cfg.d, r = cfg.r, ct = std::cos(t), st = std::sin(t);
  const double w = sample_omega(cfg, t);
  const double k = R * R - d * d;
  return {Line((d * st - w) * st - r * ct, -((d * ct + r) * st - w * ct), k),
          Line((d * st + w) * st - r * ct, -((d * ct + r) * st + w * ct), k),
          Line(R * ct - d, R * st, -2 * d * R * ct + R * R + d * d)};
}

/// The X40-centered excentral inconic I3' as an explicit implicit equation.
inline ConicMatrix i3x_implicit(const PoristicConfig& cfg, double t) {
  const double R = cfg.R, d = cfg.d, ct = std::cos(t), st = std::sin(t);
  const double k = (R * R - d * d) * (R * R - d * d);
  const double xx = k - 8 * d * R * R * (R * ct - d) * st * st;
  const double yy = k - 4 * d * R * ct * ((R * ct - d) * (R * ct - d) - R * R * st * st);
  const double xy = 4 * d * R * st * (2 * R * ct - R - d) * (2 * R * ct + R - d);
  const double c0 = -k * (R * R + d * d - 2 * d * R * ct);
  return ConicMatrix::from_polynomial(xx, xy, yy, 0.0, 0.0, c0);
}

/// The X1-centered circumconic E1 as an explicit implicit equation (degree-6
/// homogeneous constant term).
inline ConicMatrix e1_implicit(const PoristicConfig& cfg, double t) {
  const double R = cfg.R, d = cfg.d, ct = std::cos(t), st = std::sin(t);
  const double k = R * R - d * d;
  const double m = (R * ct - d) * (R * ct - d) - R * R * st * st;
  const double xx = k * k - 4 * d * R * ct * m;
  const double yy = k * k - 8 * d * R * R * (R * ct - d) * st * st;
  const double xy = -4 * d * R * st * (2 * R * ct - R - d) * (2 * R * ct + R - d);
  const double x = 4 * d * (4 * d * R * ct * m - k * k);
  const double y = 8 * R * d * d * st * (2 * R * ct + R - d) * (2 * R * ct - R - d);
  const double c0 = -2 * d * R * ct * (16 * d * d * R * ct * (R * ct - d) - k * (R * R + 7 * d * d)) -
                    (R * R - 3 * d * d) * k * k;
  return ConicMatrix::from_polynomial(xx, xy, yy, x, y, c0);
}

/// Distance from X3 to the stationary antiorthic axis, (3R^2 - d^2) / (2d).
inline double antiorthic_offset(const PoristicConfig& cfg) {
  if (cfg.d < 1e-12 * cfg.R) throw Error(ErrorCode::AxisAtInfinity, "antiorthic axis at infinity when d = 0");
  return (3 * cfg.R * cfg.R - cfg.d * cfg.d) / (2 * cfg.d);
}

/// Stationary antiorthic axis, the vertical line x = d + (3R^2 - d^2)/(2d) in the X40 frame.
inline Line antiorthic_axis(const PoristicConfig& cfg) { return Line::vertical(cfg.d + antiorthic_offset(cfg)); }

/// Intersection of the antiorthic axis with the line X1X3, i.e. the stationary X1155.
inline Point antiorthic_foot(const PoristicConfig& cfg) { return {cfg.d + antiorthic_offset(cfg), 0.0}; }

/// Circles centered at X3 - (R, 0) with the same power at the antiorthic
/// axis as the incircle (first) and as the circumcircle (second).
inline std::pair<Circle, Circle> weaver_circles(const PoristicConfig& cfg) {
  const double R = cfg.R, d = cfg.d;
  if (d < 1e-12 * R) throw Error(ErrorCode::AxisAtInfinity, "antiorthic axis at infinity when d = 0");
  const Point c = from_circumcenter_frame(cfg, {-R, 0.0});
  const double rw1 = (d + R) / (2 * R) * std::sqrt((3 * R - d) * (4 * R * R - R * d - d * d) / d);
  const double rw2 = std::sqrt((3 * R - d) * (d + R) * R / d);
  return {Circle{c, rw1}, Circle{c, rw2}};
}

/// The originally proposed equal-power circle, which does not have the incircle's power.
inline Circle weaver_original_circle(const PoristicConfig& cfg) {
  const double R = cfg.R, d = cfg.d, r = cfg.r;
  return {from_circumcenter_frame(cfg, {-R, 0.0}), std::sqrt(R * d * (R + d) * (R + d + r)) / d};
}

enum class ConicTag { E1, E9, E10, I9, E3x, E5x, E6x, I3x, I5x };

inline constexpr std::array<ConicTag, 9> kAllConicTags{ConicTag::E1,  ConicTag::E9,  ConicTag::E10,
                                                       ConicTag::I9,  ConicTag::E3x, ConicTag::E5x,
                                                       ConicTag::E6x, ConicTag::I3x, ConicTag::I5x};

constexpr std::string_view to_string(ConicTag tag) {
  switch (tag) {
    case ConicTag::E1: return "E1";
    case ConicTag::E9: return "E9";
    case ConicTag::E10: return "E10";
    case ConicTag::I9: return "I9";
    case ConicTag::E3x: return "E3x";
    case ConicTag::E5x: return "E5x";
    case ConicTag::E6x: return "E6x";
    case ConicTag::I3x: return "I3x";
    case ConicTag::I5x: return "I5x";
  }
  return "?";
}

/// Builds a named conic on an existing sample. Primed (x-suffixed) tags are
/// built on the excentral triangle around its own centers.
inline ConicMatrix named_conic(const FamilySample& s, ConicTag tag) {
  const Triangle& ref = s.triangle;
  const Triangle& exc = s.excentral;
  switch (tag) {
    case ConicTag::E1: return circumconic_centered(ref, center(ref, CenterId::X1));
    case ConicTag::E9: return circumconic_centered(ref, center(ref, CenterId::X9));
    case ConicTag::E10: return circumconic_centered(ref, center(ref, CenterId::X10));
    case ConicTag::I9: return inconic_centered(ref, center(ref, CenterId::X9)).conic;
    case ConicTag::E3x: return circumconic_centered(exc, center(exc, CenterId::X3));
    case ConicTag::E5x: return circumconic_centered(exc, center(exc, CenterId::X5));
    case ConicTag::E6x: return circumconic_centered(exc, center(exc, CenterId::X6));
    case ConicTag::I3x: return inconic_centered(exc, center(exc, CenterId::X3)).conic;
    case ConicTag::I5x: return inconic_centered(exc, center(exc, CenterId::X5)).conic;
  }
  throw Error(ErrorCode::UnknownQuantity, "unknown conic tag");
}

inline ConicMatrix named_conic(const PoristicConfig& cfg, double t, ConicTag tag) {
  return named_conic(sample(cfg, t), tag);
}

enum class ObtuseClass { AllAcute, ContainsRight, ContainsObtuse };

constexpr std::string_view to_string(ObtuseClass c) {
  switch (c) {
    case ObtuseClass::AllAcute: return "AllAcute";
    case ObtuseClass::ContainsRight: return "ContainsRight";
    case ObtuseClass::ContainsObtuse: return "ContainsObtuse";
  }
  return "?";
}

inline ObtuseClass obtuse_class(const PoristicConfig& cfg) {
  if (std::abs(cfg.d - cfg.r) <= 1e-12 * cfg.R) return ObtuseClass::ContainsRight;
  return cfg.d > cfg.r ? ObtuseClass::ContainsObtuse : ObtuseClass::AllAcute;
}

inline bool is_obtuse(const FamilySample& s) { return is_obtuse(s.triangle); }

}  // namespace porism
