#pragma once

// The figure set rendered by `porism-lab figure`.

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "porism/billiard.hpp"
#include "porism/lab/svg.hpp"
#include "porism/poristic.hpp"

namespace porism::lab {

inline const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"obtuse",         "odehnal",     "inconics", "circumX10",
                                            "cb-focus-locus", "cb-poristic", "cb-plots", "circumhyps"};
  return ids;
}

namespace figures {

inline constexpr double kWidth = 900;
inline constexpr double kHeight = 600;
inline const std::array<double, 2> kTwoTimes{0.6, 2.2};

inline const Style kCircumcircle{"#7b2d8e", 1.5};
inline const Style kIncircle{"#2e8b3a", 1.5};
inline const Style kTriangle{"#1f4fbf", 1.5};
inline const Style kTriangleAlt{"#1f4fbf", 1.2, "none", "6,4"};
inline const Style kExcentral{"#3fa34d", 1.0};
inline const Style kExcentralAlt{"#3fa34d", 0.8, "none", "6,4"};
inline const Style kLocus{"#e08a00", 1.2};

inline std::string title(const PoristicConfig& cfg, const std::string& what) {
  return what + "  (R=" + fmt(cfg.R, 4) + ", r=" + fmt(cfg.r, 5) + ", r/R=" + fmt(cfg.rho, 5) + ")";
}

inline Panel family_panel(double px, double pw, double half_extent, Point focus) {
  return Panel(px, 40, pw, kHeight - 60, focus.x - half_extent, focus.x + half_extent, focus.y - half_extent,
               focus.y + half_extent);
}

inline void fixed_circles(SvgDocument& doc, const Panel& p, const PoristicConfig& cfg) {
  doc.circle(p, cfg.circumcircle(), kCircumcircle);
  doc.circle(p, cfg.incircle(), kIncircle);
}

inline void center_dots(SvgDocument& doc, const Panel& p, const PoristicConfig& cfg) {
  doc.dot(p, cfg.x1(), "#2e8b3a", "X1");
  doc.dot(p, cfg.x3(), "#7b2d8e", "X3");
  doc.dot(p, cfg.x40(), "#333333", "X40");
}

inline std::string obtuse(const PoristicConfig& cfg) {
  SvgDocument doc(kWidth, kHeight);
  const Panel p = family_panel(20, kWidth - 40, 1.25 * cfg.R, cfg.x3());
  doc.text(20, 24, title(cfg, "Poristic family, obtuse members in red: " + std::string(to_string(obtuse_class(cfg)))));
  doc.begin_panel(p);
  fixed_circles(doc, p, cfg);
  for (int k = 0; k < 12; ++k) {
    const FamilySample s = sample(cfg, 2 * std::numbers::pi * k / 12);
    Style st = is_obtuse(s.triangle) ? Style{"#c0392b", 1.0} : Style{"#1f4fbf", 1.0};
    doc.triangle(p, s.triangle, st);
  }
  center_dots(doc, p, cfg);
  doc.end_panel();
  doc.frame(p);
  return doc.str();
}

inline std::string odehnal(const PoristicConfig& cfg) {
  SvgDocument doc(kWidth, kHeight);
  const Panel p = family_panel(20, kWidth - 40, 2.3 * cfg.R, cfg.x40());
  doc.text(20, 24, title(cfg, "Excenter locus (circle of radius 2R about X40) and the excentral caustic I5'"));
  doc.begin_panel(p);
  fixed_circles(doc, p, cfg);
  doc.circle(p, cfg.excenter_circle(), kLocus);
  const FamilySample s0 = sample(cfg, kTwoTimes[0]);
  const FamilySample s1 = sample(cfg, kTwoTimes[1]);
  draw_conic(doc, p, named_conic(s0, ConicTag::I5x), Style{"#2e8b3a", 1.2, "none", "2,3"});
  doc.triangle(p, s0.triangle, kTriangle);
  doc.triangle(p, s0.excentral, kExcentral);
  doc.triangle(p, s1.triangle, kTriangleAlt);
  doc.triangle(p, s1.excentral, kExcentralAlt);
  center_dots(doc, p, cfg);
  doc.end_panel();
  doc.frame(p);
  return doc.str();
}

inline std::string inconics(const PoristicConfig& cfg) {
  SvgDocument doc(kWidth, kHeight);
  doc.text(20, 24, title(cfg, "Inconic invariants: I5' (stationary), I3' and E1 (rigid rotation)"));
  for (std::size_t i = 0; i < kTwoTimes.size(); ++i) {
    const Panel p = family_panel(20 + i * (kWidth - 20) / 2, (kWidth - 60) / 2, 2.2 * cfg.R, cfg.x40());
    const FamilySample s = sample(cfg, kTwoTimes[i]);
    doc.begin_panel(p);
    fixed_circles(doc, p, cfg);
    draw_conic(doc, p, named_conic(s, ConicTag::I5x), Style{"#2e8b3a", 1.2, "none", "5,3"});
    draw_conic(doc, p, named_conic(s, ConicTag::I3x), Style{"#c0392b", 1.2});
    draw_conic(doc, p, named_conic(s, ConicTag::E1), Style{"#27ae60", 1.2});
    doc.triangle(p, s.triangle, kTriangle);
    doc.triangle(p, s.excentral, kExcentral);
    center_dots(doc, p, cfg);
    doc.end_panel();
    doc.frame(p);
    doc.text(p.px() + 6, p.py() + 16, "t = " + fmt(s.t, 2), 11);
  }
  return doc.str();
}

inline std::string circum_x10(const PoristicConfig& cfg) {
  SvgDocument doc(kWidth, kHeight);
  doc.text(20, 24, title(cfg, "E10 (X10-centered circumconic) and excentral E5', equal invariant aspect ratio"));
  for (std::size_t i = 0; i < kTwoTimes.size(); ++i) {
    const Panel p = family_panel(20 + i * (kWidth - 20) / 2, (kWidth - 60) / 2, 2.6 * cfg.R, cfg.x40());
    const FamilySample s = sample(cfg, kTwoTimes[i]);
    doc.begin_panel(p);
    fixed_circles(doc, p, cfg);
    draw_conic(doc, p, named_conic(s, ConicTag::E10), Style{"#c0392b", 1.2});
    draw_conic(doc, p, named_conic(s, ConicTag::E5x), Style{"#8e44ad", 1.2, "none", "5,3"});
    doc.triangle(p, s.triangle, kTriangle);
    doc.triangle(p, s.excentral, kExcentral);
    doc.dot(p, center(s.triangle, CenterId::X10), "#c0392b", "X10");
    center_dots(doc, p, cfg);
    doc.end_panel();
    doc.frame(p);
    doc.text(p.px() + 6, p.py() + 16, "t = " + fmt(s.t, 2), 11);
  }
  return doc.str();
}

inline std::string cb_focus_locus(const PoristicConfig& cfg) {
  SvgDocument doc(kWidth, kHeight);
  const Panel p = family_panel(20, kWidth - 40, 1.4 * cfg.R, cfg.x3());
  doc.text(20, 24, title(cfg, "Circumbilliard E9: foci trace a circle, X9 traces a circle"));
  doc.begin_panel(p);
  fixed_circles(doc, p, cfg);
  if (cfg.d > 1e-12 * cfg.R) {
    const FociLocus fl = foci_locus_check(cfg);
    doc.circle(p, Circle{fl.center, fl.radius}, kLocus);
    doc.circle(p, x9_locus(cfg), Style{"#16a085", 1.0, "none", "4,3"});
  }
  for (int k = 0; k < 6; ++k) {
    const FamilySample s = sample(cfg, 2 * std::numbers::pi * k / 6 + 0.3);
    draw_conic(doc, p, named_conic(s, ConicTag::E9), Style{"#555555", 0.8});
  }
  for (int k = 0; k < 60; ++k) {
    const FamilySample s = sample(cfg, 2 * std::numbers::pi * k / 60);
    const CanonicalConic cc = canonicalize(named_conic(s, ConicTag::E9));
    const auto [f1, f2] = foci(cc);
    doc.dot(p, f1, "#e08a00", "", 1.6);
    doc.dot(p, f2, "#e08a00", "", 1.6);
    doc.dot(p, cc.center, "#16a085", "", 1.3);
  }
  const FamilySample s = sample(cfg, kTwoTimes[0]);
  doc.triangle(p, s.triangle, kTriangle);
  center_dots(doc, p, cfg);
  doc.end_panel();
  doc.frame(p);
  return doc.str();
}

inline std::string cb_poristic(const PoristicConfig& cfg) {
  SvgDocument doc(kWidth, kHeight);
  doc.text(20, 24, title(cfg, "Left: Poristic frame.  Right: the same sample in the unit-perimeter billiard frame"));
  const FamilySample s = sample(cfg, kTwoTimes[0]);
  const ConicMatrix e9 = named_conic(s, ConicTag::E9);
  const ConicMatrix i5x = named_conic(s, ConicTag::I5x);
  const ConicMatrix e6x = named_conic(s, ConicTag::E6x);

  const Panel left = family_panel(20, (kWidth - 60) / 2, 2.6 * cfg.R, cfg.x40());
  doc.begin_panel(left);
  fixed_circles(doc, left, cfg);
  doc.circle(left, cfg.excenter_circle(), kLocus);
  draw_conic(doc, left, e9, Style{"black", 1.2});
  draw_conic(doc, left, i5x, Style{"#c0392b", 1.2});
  draw_conic(doc, left, e6x, Style{"#6b8e23", 1.2});
  doc.triangle(left, s.triangle, kTriangle);
  doc.triangle(left, s.excentral, kExcentral);
  doc.end_panel();
  doc.frame(left);

  const SimilarityParams sp = similarity_params(s);
  const Similarity back = sp.backward();
  const double k = 1.0 / sp.scale;
  const Panel right(20 + (kWidth - 20) / 2, 40, (kWidth - 60) / 2, kHeight - 60, -0.6, 0.6, -0.6, 0.6);
  doc.begin_panel(right);
  doc.circle(right, Circle{back.apply(cfg.x3()), cfg.R * k}, kCircumcircle);
  doc.circle(right, Circle{back.apply(cfg.x1()), cfg.r * k}, kIncircle);
  doc.circle(right, Circle{back.apply(cfg.x40()), 2 * cfg.R * k}, kLocus);
  draw_conic(doc, right, e9.transformed(back), Style{"black", 1.2});
  draw_conic(doc, right, i5x.transformed(back), Style{"#c0392b", 1.2});
  draw_conic(doc, right, e6x.transformed(back), Style{"#6b8e23", 1.2});
  doc.triangle(right, normalize_sample(sp, s), kTriangle);
  doc.triangle(right, back.apply(s.excentral), kExcentral);
  doc.end_panel();
  doc.frame(right);
  return doc.str();
}

inline void plot_axes(SvgDocument& doc, const Panel& p, const std::string& xlabel, const std::string& ylabel,
                      int xticks, int yticks) {
  doc.frame(p);
  for (int i = 0; i <= xticks; ++i) {
    const double x = p.xmin() + (p.xmax() - p.xmin()) * i / xticks;
    const Point m = p.map({x, p.ymin()});
    doc.text(m.x, m.y + 14, fmt(x, 2), 10, "#333333", "middle");
  }
  for (int i = 0; i <= yticks; ++i) {
    const double y = p.ymin() + (p.ymax() - p.ymin()) * i / yticks;
    const Point m = p.map({p.xmin(), y});
    doc.text(m.x - 4, m.y + 3, fmt(y, 2), 10, "#333333", "end");
  }
  doc.text(p.px() + p.pw() / 2, p.py() + p.ph() + 30, xlabel, 12, "black", "middle");
  doc.text(p.px() + 4, p.py() - 6, ylabel, 12);
}

inline std::string cb_plots(const PoristicConfig& cfg) {
  SvgDocument doc(kWidth, kHeight);
  doc.text(20, 24, "Left: perimeter L(t) for several r/R.  Right: circumbilliard semi-axes over L versus r/R");
  const double two_pi = 2 * std::numbers::pi;

  const std::array<double, 5> rhos{0.05, 0.2, 0.36266, 0.49, cfg.rho};
  double lmax = 0.0;
  for (double rho : rhos) {
    const PoristicConfig c = config_from_rR(cfg.R, rho * cfg.R);
    lmax = std::max(lmax, perimeter_closed_form(c, std::numbers::pi));
  }
  const Panel left(70, 60, 340, 460, 0.0, two_pi, 0.0, 1.1 * lmax, false);
  doc.begin_panel(left);
  const std::array<std::string, 5> colors{"#1f4fbf", "#27ae60", "#c0392b", "#8e44ad", "black"};
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    const PoristicConfig c = config_from_rR(cfg.R, rhos[i] * cfg.R);
    std::vector<Point> pts;
    for (int k = 0; k <= kConicPoints; ++k) {
      const double t = two_pi * k / kConicPoints;
      pts.push_back({t, perimeter_closed_form(c, t)});
    }
    doc.polyline(left, pts, Style{colors[i], i + 1 == rhos.size() ? 2.0 : 1.2, "none", i + 1 == rhos.size() ? "5,3" : ""});
  }
  doc.end_panel();
  plot_axes(doc, left, "t", "L(t)", 4, 4);
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    doc.text(left.px() + 10, left.py() + left.ph() - 10 - 14 * static_cast<double>(rhos.size() - 1 - i),
             "r/R = " + fmt(rhos[i], 5), 10, colors[i]);
  }

  const Panel right(500, 60, 340, 460, 0.0, 0.5, 0.0, 0.26, false);
  std::vector<Point> a9, b9;
  for (int k = 1; k <= kConicPoints; ++k) {
    const double rho = 0.5 * k / kConicPoints;
    const CircumbilliardAxes ax = cb_axes_normalized(rho);
    a9.push_back({rho, ax.a9});
    b9.push_back({rho, ax.b9});
  }
  doc.begin_panel(right);
  doc.polyline(right, a9, Style{"#c0392b", 1.5});
  doc.polyline(right, b9, Style{"#1f4fbf", 1.5});
  doc.segment(right, {0.0, std::sqrt(3.0) / 9}, {0.5, std::sqrt(3.0) / 9}, Style{"#888888", 0.6, "none", "3,3"});
  doc.dot(right, {cfg.rho, cb_axes_normalized(cfg.rho).a9}, "black");
  doc.dot(right, {cfg.rho, cb_axes_normalized(cfg.rho).b9}, "black");
  doc.end_panel();
  plot_axes(doc, right, "r/R", "semi-axis / L", 5, 4);
  doc.text(right.px() + 10, right.py() + 20, "a9/L", 11, "#c0392b");
  doc.text(right.px() + 10, right.py() + 36, "b9/L", 11, "#1f4fbf");
  return doc.str();
}

inline std::string circumhyps(const PoristicConfig& cfg) {
  SvgDocument doc(kWidth, kHeight);
  doc.text(20, 24, title(cfg, "Feuerbach hyperbola (center X11) and excentral circumhyperbola (center X100)"));
  const Panel p = family_panel(20, kWidth - 40, 3.0 * cfg.R, cfg.x40());
  const FamilySample s = sample(cfg, 0.9);
  doc.begin_panel(p);
  fixed_circles(doc, p, cfg);
  doc.circle(p, cfg.excenter_circle(), kLocus);
  doc.triangle(p, s.triangle, kTriangle);
  doc.triangle(p, s.excentral, kExcentral);
  if (cfg.d > 1e-12 * cfg.R) {
    const Point x11 = center(s.triangle, CenterId::X11);
    const Point x100 = center(s.triangle, CenterId::X100);
    draw_conic(doc, p, circumconic_centered(s.triangle, x11), Style{"#c0392b", 1.2});
    draw_conic(doc, p, circumconic_centered(s.excentral, x100), Style{"#8e44ad", 1.2});
    doc.dot(p, x11, "#c0392b", "X11");
    doc.dot(p, x100, "#8e44ad", "X100");
  }
  center_dots(doc, p, cfg);
  doc.end_panel();
  doc.frame(p);
  return doc.str();
}

}  // namespace figures

inline std::string figure_svg(const std::string& id, const PoristicConfig& cfg) {
  if (id == "obtuse") return figures::obtuse(cfg);
  if (id == "odehnal") return figures::odehnal(cfg);
  if (id == "inconics") return figures::inconics(cfg);
  if (id == "circumX10") return figures::circum_x10(cfg);
  if (id == "cb-focus-locus") return figures::cb_focus_locus(cfg);
  if (id == "cb-poristic") return figures::cb_poristic(cfg);
  if (id == "cb-plots") return figures::cb_plots(cfg);
  if (id == "circumhyps") return figures::circumhyps(cfg);
  std::string valid;
  for (const std::string& f : figure_ids()) valid += (valid.empty() ? "" : ", ") + f;
  throw Error(ErrorCode::UnknownFigure, "'" + id + "'; valid figures: " + valid);
}

}  // namespace porism::lab
