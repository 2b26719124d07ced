#pragma once

// Plane-geometry primitives: points, lines, circles, triangles, and general
// conics stored as symmetric 3x3 quadratic forms, with canonicalization and
// incidence/tangency residuals.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include <Eigen/Dense>

#include "porism/error.hpp"

namespace porism {

namespace tol {
/// Triangle degenerate when signed area < kTriangle * (longest side)^2.
inline constexpr double kTriangle = 1e-12;
/// Conic degenerate when |det M| < kConic under max-entry normalization.
inline constexpr double kConic = 1e-12;
/// Relative axis difference under which a conic is treated as a circle.
inline constexpr double kCircular = 1e-9;
}  // namespace tol

struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  constexpr Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  constexpr Point operator*(double s) const { return {x * s, y * s}; }
  constexpr Point operator/(double s) const { return {x / s, y / s}; }
  constexpr Point operator-() const { return {-x, -y}; }
  constexpr bool operator==(const Point&) const = default;
};

constexpr Point operator*(double s, Point p) { return p * s; }
constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
constexpr Point midpoint(Point a, Point b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

/// Maps an angle to the half-open interval (-pi/2, pi/2], i.e. an undirected axis direction.
inline double fold_axis_angle(double angle) {
  constexpr double pi = std::numbers::pi;
  double a = std::remainder(angle, pi);  // [-pi/2, pi/2]
  if (a <= -pi / 2) a += pi;
  return a;
}

/// Smallest distance between two undirected axis directions, modulo `period`
/// (pi for axes, pi/2 when major/minor ownership is irrelevant).
inline double axis_angle_difference(double a, double b, double period = std::numbers::pi) {
  double diff = std::remainder(a - b, period);
  return std::abs(diff);
}

/// Locus a*x + b*y + c = 0, stored with a^2 + b^2 = 1 and the first nonzero of (a, b) positive.
class Line {
 public:
  Line(double a, double b, double c) {
    const double n = std::hypot(a, b);
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw Error(ErrorCode::DegenerateConic, "line with a = b = 0");
    }
    double sign = (a > 0.0 || (a == 0.0 && b > 0.0)) ? 1.0 : -1.0;
    a_ = sign * a / n;
    b_ = sign * b / n;
    c_ = sign * c / n;
  }

  static Line through(Point p, Point q) {
    const Point d = q - p;
    return Line(-d.y, d.x, cross(p, d));
  }

  /// Vertical line x = x0.
  static Line vertical(double x0) { return Line(1.0, 0.0, -x0); }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  /// Signed Euclidean distance of p from the line.
  double signed_distance(Point p) const { return a_ * p.x + b_ * p.y + c_; }
  Point normal() const { return {a_, b_}; }
  Point direction() const { return {-b_, a_}; }

  Eigen::Vector3d homogeneous() const { return {a_, b_, c_}; }

 private:
  double a_ = 1.0;
  double b_ = 0.0;
  double c_ = 0.0;
};

inline Point intersect(const Line& l1, const Line& l2) {
  const double det = l1.a() * l2.b() - l2.a() * l1.b();
  if (std::abs(det) < 1e-15) {
    throw Error(ErrorCode::PointAtInfinity, "intersection of parallel lines");
  }
  return {(l1.b() * l2.c() - l2.b() * l1.c()) / det, (l2.a() * l1.c() - l1.a() * l2.c()) / det};
}

struct Circle {
  Point center;
  double radius = 1.0;

  Circle() = default;
  Circle(Point c, double r) : center(c), radius(r) {
    if (!(r > 0.0)) throw Error(ErrorCode::InvalidConfig, "circle radius must be positive");
  }
};

/// |p - center|^2 - radius^2.
inline double power_of_point(Point p, const Circle& c) {
  const Point d = p - c.center;
  return dot(d, d) - c.radius * c.radius;
}

/// Three vertices in counter-clockwise order.
class Triangle {
 public:
  Triangle(Point p1, Point p2, Point p3) : v_{p1, p2, p3} {
    double area = signed_area();
    if (area < 0.0) {
      std::swap(v_[1], v_[2]);
      area = -area;
    }
    const double longest = std::max({distance(v_[0], v_[1]), distance(v_[1], v_[2]), distance(v_[2], v_[0])});
    if (!std::isfinite(area) || area <= tol::kTriangle * longest * longest) {
      throw Error(ErrorCode::DegenerateTriangle, "vertices are (nearly) collinear");
    }
  }

  const Point& operator[](std::size_t i) const { return v_[i]; }
  const std::array<Point, 3>& vertices() const { return v_; }

  double signed_area() const { return 0.5 * cross(v_[1] - v_[0], v_[2] - v_[0]); }
  double area() const { return std::abs(signed_area()); }
  Point centroid() const { return (v_[0] + v_[1] + v_[2]) / 3.0; }

  /// Side line opposite vertex i, i.e. through v[i+1], v[i+2].
  Line side_line(std::size_t i) const { return Line::through(v_[(i + 1) % 3], v_[(i + 2) % 3]); }

 private:
  std::array<Point, 3> v_;
};

/// p -> scale * Rot(angle) * p + translation.
struct Similarity {
  double scale = 1.0;
  double angle = 0.0;
  Point translation;

  Point apply(Point p) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return Point{scale * (c * p.x - s * p.y), scale * (s * p.x + c * p.y)} + translation;
  }

  Triangle apply(const Triangle& t) const { return Triangle(apply(t[0]), apply(t[1]), apply(t[2])); }

  Similarity inverse() const {
    Similarity inv{1.0 / scale, -angle, {}};
    inv.translation = -inv.apply(translation);
    return inv;
  }

  Eigen::Matrix3d homogeneous() const {
    const double c = std::cos(angle), s = std::sin(angle);
    Eigen::Matrix3d m;
    m << scale * c, -scale * s, translation.x,  //
        scale * s, scale * c, translation.y,    //
        0.0, 0.0, 1.0;
    return m;
  }
};

enum class ConicKind { Ellipse, Hyperbola, DegenerateLines, Empty };

constexpr std::string_view to_string(ConicKind k) {
  switch (k) {
    case ConicKind::Ellipse: return "Ellipse";
    case ConicKind::Hyperbola: return "Hyperbola";
    case ConicKind::DegenerateLines: return "DegenerateLines";
    case ConicKind::Empty: return "Empty";
  }
  return "?";
}

struct CanonicalConic {
  Point center;
  double angle = 0.0;  ///< direction of the major (transverse) axis, in (-pi/2, pi/2]
  double semi_major = 0.0;
  double semi_minor = 0.0;
  ConicKind kind = ConicKind::Ellipse;

  double aspect_ratio() const { return semi_major / semi_minor; }
  /// Half the distance between the foci.
  double focal_half_distance() const {
    if (kind == ConicKind::Hyperbola) return std::sqrt(semi_major * semi_major + semi_minor * semi_minor);
    return std::sqrt(std::abs(semi_major * semi_major - semi_minor * semi_minor));
  }
};

/// Real symmetric 3x3 form M with [x y 1] M [x y 1]^T = 0, scaled so the
/// largest-magnitude entry is +-1. The sign of the form is preserved.
class ConicMatrix {
 public:
  explicit ConicMatrix(const Eigen::Matrix3d& m) {
    Eigen::Matrix3d sym = 0.5 * (m + m.transpose());
    const double mx = sym.cwiseAbs().maxCoeff();
    if (!(mx > 0.0) || !std::isfinite(mx)) throw Error(ErrorCode::DegenerateConic, "zero or non-finite conic matrix");
    m_ = sym / mx;
  }

  /// A x^2 + 2B xy + C y^2 + 2D x + 2E y + F = 0.
  static ConicMatrix from_coefficients(double A, double B, double C, double D, double E, double F) {
    Eigen::Matrix3d m;
    m << A, B, D, B, C, E, D, E, F;
    return ConicMatrix(m);
  }

  /// Plain polynomial xx*x^2 + xy*x*y + yy*y^2 + x*x + y*y + c = 0.
  static ConicMatrix from_polynomial(double xx, double xy, double yy, double x, double y, double c) {
    return from_coefficients(xx, xy / 2, yy, x / 2, y / 2, c);
  }

  static ConicMatrix from_circle(const Circle& c) {
    const Point o = c.center;
    return from_coefficients(1, 0, 1, -o.x, -o.y, dot(o, o) - c.radius * c.radius);
  }

  /// Builds the form of an ellipse or hyperbola from its canonical description.
  static ConicMatrix from_canonical(const CanonicalConic& cc) {
    Eigen::Matrix3d local = Eigen::Matrix3d::Zero();
    local(0, 0) = 1.0 / (cc.semi_major * cc.semi_major);
    local(1, 1) = (cc.kind == ConicKind::Hyperbola ? -1.0 : 1.0) / (cc.semi_minor * cc.semi_minor);
    local(2, 2) = -1.0;
    // local coordinates are the inverse similarity of the canonical frame
    const Similarity frame{1.0, cc.angle, cc.center};
    const Eigen::Matrix3d to_local = frame.inverse().homogeneous();
    return ConicMatrix(to_local.transpose() * local * to_local);
  }

  const Eigen::Matrix3d& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  /// The conic mapped through a similarity: points p on this conic go to s.apply(p).
  ConicMatrix transformed(const Similarity& s) const {
    const Eigen::Matrix3d inv = s.inverse().homogeneous();
    return ConicMatrix(inv.transpose() * m_ * inv);
  }

  ConicMatrix translated(Point by) const { return transformed(Similarity{1.0, 0.0, by}); }

  double determinant() const { return m_.determinant(); }

  Eigen::Matrix3d adjugate() const {
    Eigen::Matrix3d adj;
    const auto& m = m_;
    adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return adj;
  }

 private:
  Eigen::Matrix3d m_;
};

/// Max-entry distance between two forms, up to the projective sign.
inline double conic_distance(const ConicMatrix& a, const ConicMatrix& b) {
  const double plus = (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
  const double minus = (a.matrix() + b.matrix()).cwiseAbs().maxCoeff();
  return std::min(plus, minus);
}

/// [x y 1] M [x y 1]^T under the stored normalization.
inline double conic_eval(const ConicMatrix& conic, Point p) {
  const Eigen::Vector3d h(p.x, p.y, 1.0);
  return h.dot(conic.matrix() * h);
}

/// Dual-form value L adj(M) L^T divided by the largest entry of adj(M); zero iff the line is tangent.
inline double tangency_residual(const ConicMatrix& conic, const Line& line) {
  const Eigen::Matrix3d adj = conic.adjugate();
  const double scale = adj.cwiseAbs().maxCoeff();
  const Eigen::Vector3d l = line.homogeneous();
  return l.dot(adj * l) / scale;
}

inline CanonicalConic canonicalize(const ConicMatrix& conic) {
  const Eigen::Matrix3d& m = conic.matrix();
  const Eigen::Matrix2d q = m.topLeftCorner<2, 2>();
  const Eigen::Vector2d g = m.topRightCorner<2, 1>();
  const double det_q = q.determinant();
  const double det_m = m.determinant();

  if (std::abs(det_q) < tol::kConic) {
    if (std::abs(det_m) < tol::kConic) throw Error(ErrorCode::DegenerateConic, "singular quadratic part and form");
    throw Error(ErrorCode::NotCentral, "parabola");
  }

  const Eigen::Vector2d c = q.ldlt().solve(-g);
  const Eigen::Vector2d c_refined = c + q.ldlt().solve(-g - q * c);
  // value of the form at the center
  const double k = m(2, 2) + g.dot(c_refined);

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig;
  eig.computeDirect(q);
  const Eigen::Vector2d lam = eig.eigenvalues();
  const Eigen::Matrix2d vec = eig.eigenvectors();

  CanonicalConic out;
  out.center = {c_refined.x(), c_refined.y()};

  auto axis_angle = [&](int col) { return fold_axis_angle(std::atan2(vec(1, col), vec(0, col))); };

  if (std::abs(det_m) < tol::kConic) {
    out.kind = ConicKind::DegenerateLines;
    out.angle = axis_angle(0);
    return out;
  }

  const bool same_sign = lam(0) * lam(1) > 0.0;
  if (same_sign) {
    if (k * lam(0) > 0.0) {
      out.kind = ConicKind::Empty;
      out.angle = axis_angle(0);
      return out;
    }
    out.kind = ConicKind::Ellipse;
    // smaller |lambda| owns the major axis
    const int major = std::abs(lam(0)) <= std::abs(lam(1)) ? 0 : 1;
    const int minor = 1 - major;
    out.semi_major = std::sqrt(-k / lam(major));
    out.semi_minor = std::sqrt(-k / lam(minor));
    const bool circular = (out.semi_major - out.semi_minor) <= tol::kCircular * out.semi_major;
    out.angle = circular ? 0.0 : axis_angle(major);
    return out;
  }

  out.kind = ConicKind::Hyperbola;
  // transverse axis: the eigen-direction where -k / lambda > 0
  const int transverse = (-k / lam(0)) > 0.0 ? 0 : 1;
  const int conjugate = 1 - transverse;
  out.semi_major = std::sqrt(-k / lam(transverse));
  out.semi_minor = std::sqrt(k / lam(conjugate));
  out.angle = axis_angle(transverse);
  return out;
}

/// Foci of an ellipse or hyperbola. A circle returns its center twice.
inline std::pair<Point, Point> foci(const CanonicalConic& conic) {
  if (conic.kind != ConicKind::Ellipse && conic.kind != ConicKind::Hyperbola) {
    throw Error(ErrorCode::DegenerateConic, "foci of a degenerate conic");
  }
  if (conic.kind == ConicKind::Ellipse &&
      conic.semi_major - conic.semi_minor <= tol::kCircular * conic.semi_major) {
    return {conic.center, conic.center};
  }
  const double c = conic.focal_half_distance();
  const Point dir{std::cos(conic.angle), std::sin(conic.angle)};
  return {conic.center + dir * c, conic.center - dir * c};
}

}  // namespace porism
