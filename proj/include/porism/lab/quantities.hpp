#pragma once

// Per-sample scalar quantities available to `sweep` and reused by `verify`.

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "porism/billiard.hpp"
#include "porism/poristic.hpp"

namespace porism::lab {

/// Samples within this distance of t = 0 or t = pi are isosceles; X100 is undefined there.
inline constexpr double kIsoscelesExclusion = 1e-6;

inline bool near_isosceles(double t) {
  const double m = std::remainder(t, std::numbers::pi);
  return std::abs(m) < kIsoscelesExclusion;
}

/// The sample with vertex 0 moved by eps along x; excentral and perimeter are rebuilt.
inline FamilySample perturbed(const FamilySample& s, double eps) {
  Triangle tri(s.triangle[0] + Point{eps, 0.0}, s.triangle[1], s.triangle[2]);
  FamilySample out = s;
  out.triangle = tri;
  out.excentral = excentral(tri);
  out.perimeter = side_lengths(tri).perimeter();
  return out;
}

struct Quantity {
  std::string name;
  std::string description;
  std::function<double(const PoristicConfig&, const FamilySample&)> eval;
  bool needs_scalene = false;
};

namespace detail {

inline double aspect(const FamilySample& s, ConicTag tag) { return canonicalize(named_conic(s, tag)).aspect_ratio(); }
inline double semi_major(const FamilySample& s, ConicTag tag) { return canonicalize(named_conic(s, tag)).semi_major; }
inline double semi_minor(const FamilySample& s, ConicTag tag) { return canonicalize(named_conic(s, tag)).semi_minor; }

}  // namespace detail

inline const std::vector<Quantity>& quantity_registry() {
  using C = PoristicConfig;
  using S = FamilySample;
  static const std::vector<Quantity> registry{
      {"perimeter", "vertex-sum perimeter L(t)", [](const C&, const S& s) { return s.perimeter; }},
      {"perimeter_closed_form", "closed-form L(t)", [](const C& c, const S& s) { return perimeter_closed_form(c, s.t); }},
      {"x9_x", "Mittenpunkt x", [](const C&, const S& s) { return center(s.triangle, CenterId::X9).x; }},
      {"x9_y", "Mittenpunkt y", [](const C&, const S& s) { return center(s.triangle, CenterId::X9).y; }},
      {"theta", "circumbilliard major-axis angle",
       [](const C&, const S& s) { return canonicalize(named_conic(s, ConicTag::E9)).angle; }},
      {"theta_printed", "printed tan(theta) closed form", [](const C& c, const S& s) { return theta_closed_form(c, s.t); }},
      {"theta_double_angle", "tan(2 theta) closed form (mod pi/2)",
       [](const C& c, const S& s) { return axis_angle_double_angle_form(c, s.t); }},
      {"eta1", "E1 major semi-axis", [](const C&, const S& s) { return detail::semi_major(s, ConicTag::E1); }},
      {"zeta1", "E1 minor semi-axis", [](const C&, const S& s) { return detail::semi_minor(s, ConicTag::E1); }},
      {"mu3x", "I3' major semi-axis", [](const C&, const S& s) { return detail::semi_major(s, ConicTag::I3x); }},
      {"nu3x", "I3' minor semi-axis", [](const C&, const S& s) { return detail::semi_minor(s, ConicTag::I3x); }},
      {"mu5x", "I5' major semi-axis", [](const C&, const S& s) { return detail::semi_major(s, ConicTag::I5x); }},
      {"nu5x", "I5' minor semi-axis", [](const C&, const S& s) { return detail::semi_minor(s, ConicTag::I5x); }},
      {"ratio_e1", "E1 aspect ratio", [](const C&, const S& s) { return detail::aspect(s, ConicTag::E1); }},
      {"ratio_e9", "E9 aspect ratio", [](const C&, const S& s) { return detail::aspect(s, ConicTag::E9); }},
      {"ratio_e10", "E10 aspect ratio", [](const C&, const S& s) { return detail::aspect(s, ConicTag::E10); }},
      {"ratio_i9", "I9 aspect ratio", [](const C&, const S& s) { return detail::aspect(s, ConicTag::I9); }},
      {"ratio_e3x", "E3' aspect ratio", [](const C&, const S& s) { return detail::aspect(s, ConicTag::E3x); }},
      {"ratio_e5x", "E5' aspect ratio", [](const C&, const S& s) { return detail::aspect(s, ConicTag::E5x); }},
      {"ratio_e6x", "E6' aspect ratio", [](const C&, const S& s) { return detail::aspect(s, ConicTag::E6x); }},
      {"ratio_i3x", "I3' aspect ratio", [](const C&, const S& s) { return detail::aspect(s, ConicTag::I3x); }},
      {"ratio_i5x", "I5' aspect ratio", [](const C&, const S& s) { return detail::aspect(s, ConicTag::I5x); }},
      {"a9_over_L", "E9 major semi-axis over perimeter",
       [](const C&, const S& s) { return detail::semi_major(s, ConicTag::E9) / s.perimeter; }},
      {"b9_over_L", "E9 minor semi-axis over perimeter",
       [](const C&, const S& s) { return detail::semi_minor(s, ConicTag::E9) / s.perimeter; }},
      {"inradius", "inradius of the sample", [](const C&, const S& s) { return inradius(s.triangle); }},
      {"circumradius", "circumradius of the sample", [](const C&, const S& s) { return circumradius(s.triangle); }},
      {"inradius_billiard", "inradius after unit-perimeter normalization",
       [](const C&, const S& s) { return inradius(s.triangle) / s.perimeter; }},
      {"circumradius_billiard", "circumradius after unit-perimeter normalization",
       [](const C&, const S& s) { return circumradius(s.triangle) / s.perimeter; }},
      {"rho_billiard", "r/R after unit-perimeter normalization",
       [](const C&, const S& s) { return inradius(s.triangle) / circumradius(s.triangle); }},
      {"antiorthic_x", "x-intercept of the constructed antiorthic axis",
       [](const C&, const S& s) { return center(s.triangle, CenterId::X1155).x; }},
      {"focal_ratio", "excentral X100-centered over Feuerbach hyperbola focal length",
       [](const C&, const S& s) { return focal_length_ratio(s); }, true},
  };
  return registry;
}

inline const Quantity& find_quantity(const std::string& name) {
  for (const Quantity& q : quantity_registry()) {
    if (q.name == name) return q;
  }
  std::string valid;
  for (const Quantity& q : quantity_registry()) valid += (valid.empty() ? "" : ", ") + q.name;
  throw Error(ErrorCode::UnknownQuantity, "'" + name + "'; valid names: " + valid);
}

}  // namespace porism::lab
