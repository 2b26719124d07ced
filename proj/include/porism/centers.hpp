#pragma once

// Triangle centers from trilinear/barycentric coordinate functions, plus the
// medial and excentral triangles.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "porism/geom.hpp"

namespace porism {

/// Side lengths opposite vertices 1, 2, 3.
struct SideLengths {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;

  double perimeter() const { return s1 + s2 + s3; }
};

inline SideLengths side_lengths(const Triangle& t) {
  return {distance(t[1], t[2]), distance(t[2], t[0]), distance(t[0], t[1])};
}

/// Homogeneous trilinears, stored with unit Euclidean norm and first nonzero component positive.
class TrilinearTriple {
 public:
  TrilinearTriple(double f1, double f2, double f3) {
    const double n = std::sqrt(f1 * f1 + f2 * f2 + f3 * f3);
    if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorCode::PointAtInfinity, "trilinears all zero");
    const double first = f1 != 0.0 ? f1 : (f2 != 0.0 ? f2 : f3);
    const double s = (first > 0.0 ? 1.0 : -1.0) / n;
    f_ = {f1 * s, f2 * s, f3 * s};
  }

  double operator[](std::size_t i) const { return f_[i]; }

 private:
  std::array<double, 3> f_{};
};

/// Point with barycentric weights (w1, w2, w3) relative to the triangle's vertices.
inline Point barycentric_to_point(const Triangle& t, double w1, double w2, double w3) {
  const double sum = w1 + w2 + w3;
  const double mag = std::abs(w1) + std::abs(w2) + std::abs(w3);
  if (!(std::abs(sum) > 1e-12 * mag) || !std::isfinite(sum)) {
    throw Error(ErrorCode::PointAtInfinity, "barycentric weights sum to zero");
  }
  return (t[0] * w1 + t[1] * w2 + t[2] * w3) / sum;
}

inline Point trilinear_to_point(const Triangle& t, const TrilinearTriple& f) {
  const SideLengths s = side_lengths(t);
  return barycentric_to_point(t, f[0] * s.s1, f[1] * s.s2, f[2] * s.s3);
}

/// Closed registry of the Kimberling centers used by the Poristic family.
enum class CenterId : int {
  X1 = 1,
  X3 = 3,
  X4 = 4,
  X5 = 5,
  X6 = 6,
  X7 = 7,
  X9 = 9,
  X10 = 10,
  X11 = 11,
  X40 = 40,
  X100 = 100,
  X1155 = 1155,
};

inline constexpr std::array<CenterId, 12> kAllCenters{CenterId::X1,  CenterId::X3,  CenterId::X4,   CenterId::X5,
                                                      CenterId::X6,  CenterId::X7,  CenterId::X9,   CenterId::X10,
                                                      CenterId::X11, CenterId::X40, CenterId::X100, CenterId::X1155};

inline CenterId center_id(int k) {
  for (CenterId id : kAllCenters) {
    if (static_cast<int>(id) == k) return id;
  }
  throw Error(ErrorCode::UnsupportedCenter, "X" + std::to_string(k) + " is not in the registry");
}

/// Antiorthic axis: trilinear polar of the incenter, barycentric line x/s1 + y/s2 + z/s3 = 0.
inline Line antiorthic_axis(const Triangle& t) {
  const SideLengths s = side_lengths(t);
  // barycentric coordinate of p w.r.t. vertex i is area(p, v[i+1], v[i+2]) / area, linear in p
  Point grad{0.0, 0.0};
  double constant = 0.0;
  const double area2 = 2.0 * t.signed_area();
  const std::array<double, 3> coef{1.0 / s.s1, 1.0 / s.s2, 1.0 / s.s3};
  for (std::size_t i = 0; i < 3; ++i) {
    const Point b = t[(i + 1) % 3], c = t[(i + 2) % 3];
    // cross(b - p, c - p) = cross(b, c) - cross(p, c - b)
    const Point e = c - b;
    grad = grad + Point{-e.y, e.x} * (coef[i] / area2);
    constant += cross(b, c) * coef[i] / area2;
  }
  return Line(grad.x, grad.y, constant);
}

namespace detail {

inline void require_scalene(const SideLengths& s) {
  const double gap = std::min({std::abs(s.s1 - s.s2), std::abs(s.s2 - s.s3), std::abs(s.s3 - s.s1)});
  if (gap < 1e-10 * s.perimeter()) {
    throw Error(ErrorCode::IsoscelesDegeneracy, "X100 trilinears degenerate on isosceles triangles");
  }
}

}  // namespace detail

inline Point center(const Triangle& t, CenterId id) {
  const SideLengths s = side_lengths(t);
  const double a = s.s1, b = s.s2, c = s.s3;
  // Conway notation; polynomial barycentrics avoid the sec/cos singularities of trilinears
  const double sa = (b * b + c * c - a * a) / 2;
  const double sb = (c * c + a * a - b * b) / 2;
  const double sc = (a * a + b * b - c * c) / 2;

  switch (id) {
    case CenterId::X1: return trilinear_to_point(t, {1, 1, 1});
    case CenterId::X3: return barycentric_to_point(t, a * a * sa, b * b * sb, c * c * sc);
    case CenterId::X4: return barycentric_to_point(t, sb * sc, sc * sa, sa * sb);
    case CenterId::X5: return midpoint(center(t, CenterId::X3), center(t, CenterId::X4));
    case CenterId::X6: return trilinear_to_point(t, {a, b, c});
    case CenterId::X7: return barycentric_to_point(t, 1 / (b + c - a), 1 / (c + a - b), 1 / (a + b - c));
    case CenterId::X9: return trilinear_to_point(t, {b + c - a, c + a - b, a + b - c});
    case CenterId::X10: return barycentric_to_point(t, b + c, c + a, a + b);
    case CenterId::X11:
      if (std::max({std::abs(a - b), std::abs(b - c), std::abs(c - a)}) < 1e-10 * s.perimeter()) {
        throw Error(ErrorCode::PointAtInfinity, "X11 undefined: incircle and nine-point circle coincide");
      }
      return barycentric_to_point(t, (b + c - a) * (b - c) * (b - c), (c + a - b) * (c - a) * (c - a),
                                  (a + b - c) * (a - b) * (a - b));
    case CenterId::X40: return 2.0 * center(t, CenterId::X3) - center(t, CenterId::X1);
    case CenterId::X100:
      detail::require_scalene(s);
      return trilinear_to_point(t, {1 / (b - c), 1 / (c - a), 1 / (a - b)});
    case CenterId::X1155: {
      const Point x1 = center(t, CenterId::X1), x3 = center(t, CenterId::X3);
      if (distance(x1, x3) < 1e-10 * s.perimeter()) {
        throw Error(ErrorCode::IsoscelesDegeneracy, "line X1X3 undefined (equilateral)");
      }
      return intersect(Line::through(x1, x3), antiorthic_axis(t));
    }
  }
  throw Error(ErrorCode::UnsupportedCenter, "center not in registry");
}

/// Triangle of the three excenters; vertex i is the excenter opposite vertex i.
inline Triangle excentral(const Triangle& t) {
  const SideLengths s = side_lengths(t);
  return Triangle(barycentric_to_point(t, -s.s1, s.s2, s.s3), barycentric_to_point(t, s.s1, -s.s2, s.s3),
                  barycentric_to_point(t, s.s1, s.s2, -s.s3));
}

/// Midpoints of the sides; vertex i is the midpoint of the side opposite vertex i.
inline Triangle medial(const Triangle& t) {
  return Triangle(midpoint(t[1], t[2]), midpoint(t[2], t[0]), midpoint(t[0], t[1]));
}

inline double circumradius(const Triangle& t) {
  const SideLengths s = side_lengths(t);
  return s.s1 * s.s2 * s.s3 / (4.0 * t.area());
}

inline double inradius(const Triangle& t) { return 2.0 * t.area() / side_lengths(t).perimeter(); }

inline Circle circumcircle(const Triangle& t) { return {center(t, CenterId::X3), circumradius(t)}; }
inline Circle incircle(const Triangle& t) { return {center(t, CenterId::X1), inradius(t)}; }

/// Largest-angle test via the dot-product sign at each vertex.
inline bool is_obtuse(const Triangle& t) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (dot(t[(i + 1) % 3] - t[i], t[(i + 2) % 3] - t[i]) < 0.0) return true;
  }
  return false;
}

}  // namespace porism
