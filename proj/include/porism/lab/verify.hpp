#pragma once

// The invariance suite behind `porism-lab verify`.

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "porism/billiard.hpp"
#include "porism/lab/config.hpp"
#include "porism/lab/quantities.hpp"
#include "porism/lab/report.hpp"
#include "porism/poristic.hpp"

namespace porism::lab {

inline constexpr const char* kVersion = "1.0.0";

struct SkipRecord {
  double t = 0.0;
  std::string quantity;
  std::string reason;
};

struct VerifyResult {
  PoristicConfig family;
  std::vector<SweepReport> reports;
  std::vector<SkipRecord> skipped;
  nlohmann::ordered_json flags = nlohmann::ordered_json::object();

  bool passed() const {
    for (const SweepReport& r : reports) {
      if (!r.passed()) return false;
    }
    return true;
  }
};

namespace detail {

using SampleFn = std::function<double(const FamilySample&)>;

class Suite {
 public:
  Suite(const LabConfig& lab, VerifyResult& out) : lab_(lab), out_(out) {
    const PoristicConfig cfg = lab.family();
    samples_.reserve(static_cast<std::size_t>(lab.t_samples));
    for (int k = 0; k < lab.t_samples; ++k) {
      FamilySample s = sample(cfg, lab.t_at(k));
      if (lab.perturb && lab.perturb->index == static_cast<std::size_t>(k)) s = perturbed(s, lab.perturb->eps);
      samples_.push_back(std::move(s));
    }
  }

  const std::vector<FamilySample>& samples() const { return samples_; }

  Accumulator sweep(const std::string& name, const SampleFn& fn, bool needs_scalene = false) {
    Accumulator acc;
    for (const FamilySample& s : samples_) {
      if (needs_scalene && near_isosceles(s.t)) {
        out_.skipped.push_back({s.t, name, "isosceles sample"});
        continue;
      }
      try {
        acc.add(fn(s));
      } catch (const Error& e) {
        out_.skipped.push_back({s.t, name, e.what()});
      }
    }
    return acc;
  }

  void spread(const std::string& name, const SampleFn& fn, double tol, Verdict expected,
              std::optional<double> target = std::nullopt, bool needs_scalene = false) {
    out_.reports.push_back(make_spread_report(name, sweep(name, fn, needs_scalene), tol, expected, target));
  }

  void residual(const std::string& name, const SampleFn& fn, double tol, bool needs_scalene = false) {
    out_.reports.push_back(make_residual_report(name, sweep(name, fn, needs_scalene), tol));
  }

  /// A residual computed once from the configuration.
  void scalar(const std::string& name, double value, double tol) {
    Accumulator acc;
    acc.add(value);
    out_.reports.push_back(make_residual_report(name, acc, tol));
  }

  void skip_row(const std::string& name, const std::string& why, Mode mode = Mode::Residual) {
    SweepReport r;
    r.quantity = name;
    r.mode = mode;
    r.verdict = Verdict::Skipped;
    r.note = why;
    out_.reports.push_back(r);
  }

 private:
  const LabConfig& lab_;
  VerifyResult& out_;
  std::vector<FamilySample> samples_;
};

inline double canonical_angle(const FamilySample& s, ConicTag tag) { return canonicalize(named_conic(s, tag)).angle; }

inline double relative_gap(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0}); }

}  // namespace detail

inline VerifyResult run_verify(const LabConfig& lab) {
  lab.validate();
  VerifyResult out;
  const PoristicConfig cfg = lab.family();
  out.family = cfg;
  detail::Suite suite(lab, out);
  const double R = cfg.R, d = cfg.d, r = cfg.r, rho = cfg.rho;
  const double tol = lab.tolerance, atol = lab.angle_tolerance;
  const bool circular = d < 1e-12 * R;
  const Verdict varying = circular ? Verdict::Invariant : Verdict::Varying;
  constexpr double pi = std::numbers::pi;
  using detail::canonical_angle;
  using detail::relative_gap;
  using S = FamilySample;

  // Poncelet closure
  suite.residual("poncelet_circumcircle", [&](const S& s) {
    double worst = 0.0;
    for (const Point& v : s.triangle.vertices()) worst = std::max(worst, std::abs(distance(v, cfg.x3()) - R) / R);
    return worst;
  }, 1e-10);
  suite.residual("poncelet_incircle", [&](const S& s) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      worst = std::max(worst, std::abs(std::abs(s.triangle.side_line(i).signed_distance(cfg.x1())) - r) / R);
    }
    return worst;
  }, 1e-10);
  suite.spread("inradius", [](const S& s) { return inradius(s.triangle); }, tol, Verdict::Invariant, r);
  suite.spread("circumradius", [](const S& s) { return circumradius(s.triangle); }, tol, Verdict::Invariant, R);

  // Excentral caustic I5'
  const ConicMatrix i5x_expected = ConicMatrix::from_canonical(
      {cfg.x3(), 0.0, R, std::sqrt(R * R - d * d), ConicKind::Ellipse});
  suite.residual("i5x_stationary",
                 [&](const S& s) { return conic_distance(named_conic(s, ConicTag::I5x), i5x_expected); }, 1e-10);
  suite.residual("i5x_foci", [&](const S& s) {
    const auto [f1, f2] = foci(canonicalize(named_conic(s, ConicTag::I5x)));
    return std::min(std::max(distance(f1, cfg.x40()), distance(f2, cfg.x1())),
                    std::max(distance(f1, cfg.x1()), distance(f2, cfg.x40())));
  }, tol);
  suite.spread("mu5x", [](const S& s) { return detail::semi_major(s, ConicTag::I5x); }, tol, Verdict::Invariant, R);
  suite.spread("nu5x", [](const S& s) { return detail::semi_minor(s, ConicTag::I5x); }, tol, Verdict::Invariant,
               std::sqrt(R * R - d * d));
  suite.spread("ratio_i5x", [](const S& s) { return detail::aspect(s, ConicTag::I5x); }, tol, Verdict::Invariant,
               1 / std::sqrt(2 * rho));

  // I3' and E1
  suite.spread("mu3x", [](const S& s) { return detail::semi_major(s, ConicTag::I3x); }, tol, Verdict::Invariant, R + d);
  suite.spread("nu3x", [](const S& s) { return detail::semi_minor(s, ConicTag::I3x); }, tol, Verdict::Invariant, R - d);
  suite.spread("ratio_i3x", [](const S& s) { return detail::aspect(s, ConicTag::I3x); }, tol, Verdict::Invariant,
               (R + d) / (R - d));
  suite.residual("i3x_implicit",
                 [&](const S& s) { return conic_distance(named_conic(s, ConicTag::I3x), i3x_implicit(cfg, s.t)); }, tol);
  suite.spread("eta1", [](const S& s) { return detail::semi_major(s, ConicTag::E1); }, tol, Verdict::Invariant, R + d);
  suite.spread("zeta1", [](const S& s) { return detail::semi_minor(s, ConicTag::E1); }, tol, Verdict::Invariant, R - d);
  suite.spread("ratio_e1", [](const S& s) { return detail::aspect(s, ConicTag::E1); }, tol, Verdict::Invariant,
               (R + d) / (R - d));
  suite.residual("e1_implicit",
                 [&](const S& s) { return conic_distance(named_conic(s, ConicTag::E1), e1_implicit(cfg, s.t)); }, tol);
  if (circular) {
    suite.skip_row("e1_i3x_perpendicular", "E1 and I3' are circles when d = 0");
    suite.skip_row("x100_on_conics", "X100 undefined on equilateral samples");
  } else {
    suite.residual("e1_i3x_perpendicular", [](const S& s) {
      return axis_angle_difference(canonical_angle(s, ConicTag::E1), canonical_angle(s, ConicTag::I3x) + pi / 2);
    }, atol);
    suite.residual("x100_on_conics", [](const S& s) {
      const Point x100 = center(s.triangle, CenterId::X100);
      double worst = 0.0;
      for (ConicTag tag : {ConicTag::E1, ConicTag::I3x, ConicTag::E9}) {
        worst = std::max(worst, std::abs(conic_eval(named_conic(s, tag), x100)));
      }
      return worst;
    }, tol, true);
  }

  // Circumconics with invariant aspect ratio
  const double k10 = std::sqrt((R + d) / (R - d));
  suite.spread("ratio_e10", [](const S& s) { return detail::aspect(s, ConicTag::E10); }, tol, Verdict::Invariant, k10);
  suite.spread("ratio_e5x", [](const S& s) { return detail::aspect(s, ConicTag::E5x); }, tol, Verdict::Invariant, k10);
  suite.spread("ratio_e6x", [](const S& s) { return detail::aspect(s, ConicTag::E6x); }, tol, Verdict::Invariant,
               std::sqrt((R + d) * (3 * R + d) / ((3 * R - d) * (R - d))));
  suite.spread("ratio_e9", [](const S& s) { return detail::aspect(s, ConicTag::E9); }, tol, Verdict::Invariant,
               std::sqrt((R + d) * (3 * R - d) / ((R - d) * (3 * R + d))));
  suite.residual("e6x_e9_concentric", [](const S& s) {
    return distance(canonicalize(named_conic(s, ConicTag::E6x)).center, canonicalize(named_conic(s, ConicTag::E9)).center);
  }, tol);
  if (circular) {
    suite.skip_row("axes_parallel", "all named conics are circles when d = 0");
  } else {
    suite.residual("axes_parallel", [](const S& s) {
      const std::array<ConicTag, 6> tags{ConicTag::E9, ConicTag::I3x, ConicTag::E10, ConicTag::E6x, ConicTag::E5x,
                                         ConicTag::E1};
      std::array<double, 6> angles{};
      for (std::size_t i = 0; i < tags.size(); ++i) angles[i] = canonical_angle(s, tags[i]);
      double worst = 0.0;
      for (std::size_t i = 0; i < angles.size(); ++i) {
        for (std::size_t j = i + 1; j < angles.size(); ++j) {
          worst = std::max(worst, axis_angle_difference(angles[i], angles[j], pi / 2));
        }
      }
      return worst;
    }, atol);
  }

  // Closed-form scalars
  suite.residual("perimeter_closed_form",
                 [&](const S& s) { return std::abs(perimeter_closed_form(cfg, s.t) - s.perimeter) / s.perimeter; }, 1e-12);
  suite.spread("perimeter", [](const S& s) { return s.perimeter; }, tol, varying);
  {
    std::mt19937_64 rng(lab.seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * pi);
    Accumulator acc;
    for (int i = 0; i < 100; ++i) {
      const FamilySample s = sample(cfg, angle(rng));
      acc.add(std::abs(perimeter_closed_form(cfg, s.t) - s.perimeter) / s.perimeter);
    }
    out.reports.push_back(make_residual_report("perimeter_random_t", acc, 1e-12));
  }
  suite.residual("x9_closed_form",
                 [&](const S& s) { return distance(x9_closed_form(cfg, s.t), center(s.triangle, CenterId::X9)); }, tol);
  if (circular) {
    suite.skip_row("x9_locus", "X9 is fixed when d = 0");
    suite.skip_row("theta_double_angle", "circumbilliard is a circle when d = 0");
  } else {
    const Circle locus = x9_locus(cfg);
    suite.residual("x9_locus", [&](const S& s) {
      return std::abs(distance(center(s.triangle, CenterId::X9), locus.center) - locus.radius);
    }, tol);
    suite.residual("theta_double_angle", [&](const S& s) {
      return axis_angle_difference(canonical_angle(s, ConicTag::E9), axis_angle_double_angle_form(cfg, s.t), pi / 2);
    }, atol);
    Accumulator theta = suite.sweep("theta_printed", [&](const S& s) {
      return axis_angle_difference(canonical_angle(s, ConicTag::E9), theta_closed_form(cfg, s.t));
    });
    const bool ok = theta.count > 0 && theta.max < 1e-7;
    out.flags["theta_closed_form"] = {{"max_deviation_rad", theta.max},
                                      {"validated", ok},
                                      {"used", ok ? "closed form" : "constructed circumbilliard axis"}};
  }
  if (circular) {
    suite.skip_row("x9_x", "X9 is fixed when d = 0", Mode::Spread);
  } else {
    suite.spread("x9_x", [](const S& s) { return center(s.triangle, CenterId::X9).x; }, tol, Verdict::Varying);
  }

  // Stationary antiorthic axis and equal-power circles
  if (circular) {
    for (const char* name : {"antiorthic_x", "antiorthic_collinear", "weaver_incircle_power",
                             "weaver_circumcircle_power", "weaver_excircle_power"}) {
      suite.skip_row(name, "antiorthic axis at infinity when d = 0");
    }
  } else {
    const Line axis = antiorthic_axis(cfg);
    suite.spread("antiorthic_x", [](const S& s) { return center(s.triangle, CenterId::X1155).x; }, 1e-10,
                 Verdict::Invariant, cfg.d + antiorthic_offset(cfg));
    suite.residual("antiorthic_collinear", [&](const S& s) {
      double worst = 0.0;
      for (std::size_t i = 0; i < 3; ++i) {
        const Point p = intersect(s.triangle.side_line(i), s.excentral.side_line(i));
        worst = std::max(worst, std::abs(axis.signed_distance(p)) / R);
      }
      return worst;
    }, tol);
    const Point p0 = antiorthic_foot(cfg);
    const auto [cw1, cw2] = weaver_circles(cfg);
    const double p_in = power_of_point(p0, cfg.incircle());
    const double p_circ = power_of_point(p0, cfg.circumcircle());
    suite.scalar("weaver_incircle_power", relative_gap(power_of_point(p0, cw1), p_in), 1e-10);
    suite.scalar("weaver_circumcircle_power", relative_gap(power_of_point(p0, cw2), p_circ), 1e-10);
    suite.scalar("weaver_excircle_power", relative_gap(power_of_point(p0, cfg.excenter_circle()), p_circ), 1e-10);
    out.flags["weaver_original_radius"] = {
        {"radius", weaver_original_circle(cfg).radius},
        {"power_gap_vs_incircle", relative_gap(power_of_point(p0, weaver_original_circle(cfg)), p_in)},
        {"used", "equal-power radius"}};
  }

  // Billiard bridge
  const CircumbilliardAxes cb = cb_axes_normalized(rho);
  suite.residual("cb_fixed_ellipse", [&](const S& s) {
    const Triangle n = normalize_sample(cfg, s);
    double worst = 0.0;
    for (const Point& v : n.vertices()) worst = std::max(worst, std::abs(ellipse_residual(v, cb.a9, cb.b9)));
    return worst;
  }, 1e-8);
  suite.residual("cb_reflection_law",
                 [&](const S& s) { return reflection_law_defect(normalize_sample(cfg, s), cb.a9, cb.b9); }, atol);
  suite.spread("a9_over_L", [](const S& s) { return detail::semi_major(s, ConicTag::E9) / s.perimeter; }, tol,
               Verdict::Invariant, cb.a9);
  suite.spread("b9_over_L", [](const S& s) { return detail::semi_minor(s, ConicTag::E9) / s.perimeter; }, tol,
               Verdict::Invariant, cb.b9);
  suite.spread("rho_billiard", [](const S& s) { return inradius(s.triangle) / circumradius(s.triangle); }, tol,
               Verdict::Invariant, rho);
  suite.spread("inradius_billiard", [](const S& s) { return inradius(s.triangle) / s.perimeter; }, tol, varying);
  suite.spread("circumradius_billiard", [](const S& s) { return circumradius(s.triangle) / s.perimeter; }, tol, varying);
  if (circular) {
    suite.skip_row("cb_foci_locus", "foci coincide with X9 when d = 0");
    suite.skip_row("focal_ratio", "X11 and X100 undefined on equilateral samples", Mode::Spread);
  } else {
    const FociLocus locus = foci_locus_check(cfg);
    suite.residual("cb_foci_locus", [&](const S& s) {
      const auto [f1, f2] = foci(canonicalize(named_conic(s, ConicTag::E9)));
      return std::max(std::abs(distance(f1, locus.center) - locus.radius),
                      std::abs(distance(f2, locus.center) - locus.radius));
    }, tol);
    Accumulator printed = suite.sweep("cb_foci_printed_radius", [&](const S& s) {
      const auto [f1, f2] = foci(canonicalize(named_conic(s, ConicTag::E9)));
      return std::max(std::abs(distance(f1, locus.center) - locus.printed_radius),
                      std::abs(distance(f2, locus.center) - locus.printed_radius));
    });
    out.flags["foci_locus_radius"] = {{"printed", locus.printed_radius},
                                      {"measured", locus.radius},
                                      {"max_deviation_from_printed", printed.max},
                                      {"used", "measured"}};
    suite.spread("focal_ratio", [](const S& s) { return focal_length_ratio(s); }, 1e-7, Verdict::Invariant,
                 std::sqrt(2 / rho), true);
  }

  // Billiard-side closed forms
  for (const auto& [a, b] : {std::pair{1.5, 1.0}, std::pair{2.0, 1.0}, std::pair{1.1, 1.0}}) {
    const BilliardConfig bc = make_billiard(a, b);
    std::ostringstream tag;
    tag << a << 'x' << b;
    for (const CrossCheck& c : billiard_cross_checks(bc)) suite.scalar(c.name + "_" + tag.str(), c.rel_diff(), 1e-12);
  }
  suite.scalar("billiard_rho_1.5x1", std::abs(billiard_rho(make_billiard(1.5, 1.0)) - 0.36266), 1e-5);

  return out;
}

inline nlohmann::ordered_json report_json(const LabConfig& lab, const VerifyResult& res) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json c;
  c["R"] = res.family.R;
  c["r"] = res.family.r;
  c["d"] = res.family.d;
  c["rho"] = res.family.rho;
  c["t_samples"] = lab.t_samples;
  c["tolerance"] = lab.tolerance;
  c["angle_tolerance"] = lab.angle_tolerance;
  c["seed"] = lab.seed;
  if (lab.perturb) c["perturb"] = {{"index", lab.perturb->index}, {"eps", lab.perturb->eps}};
  j["config"] = c;
  j["reports"] = nlohmann::ordered_json::array();
  for (const SweepReport& r : res.reports) j["reports"].push_back(to_json(r));
  j["skipped"] = nlohmann::ordered_json::array();
  for (const SkipRecord& s : res.skipped) j["skipped"].push_back({{"t", s.t}, {"quantity", s.quantity}, {"reason", s.reason}});
  j["flags"] = res.flags;
  j["passed"] = res.passed();
  j["version"] = kVersion;
  return j;
}

}  // namespace porism::lab
