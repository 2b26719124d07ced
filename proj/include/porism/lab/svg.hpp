#pragma once

// Minimal deterministic SVG 1.1 writer with world-to-panel mapping.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "porism/geom.hpp"

namespace porism::lab {

inline std::string fmt(double v, int decimals = 2) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s == "-0.00" || s == "-0") s.erase(0, 1);
  return s;
}

inline std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Axis-aligned world window drawn into a pixel rectangle with equal or free scaling, y up.
class Panel {
 public:
  Panel(double px, double py, double pw, double ph, double xmin, double xmax, double ymin, double ymax,
        bool equal_scale = true)
      : px_(px), py_(py), pw_(pw), ph_(ph), xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax) {
    sx_ = pw / (xmax - xmin);
    sy_ = ph / (ymax - ymin);
    if (equal_scale) {
      const double s = std::min(sx_, sy_);
      // center the window inside the panel
      const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
      xmin_ = cx - pw / (2 * s);
      xmax_ = cx + pw / (2 * s);
      ymin_ = cy - ph / (2 * s);
      ymax_ = cy + ph / (2 * s);
      sx_ = sy_ = s;
    }
  }

  Point map(Point p) const { return {px_ + (p.x - xmin_) * sx_, py_ + (ymax_ - p.y) * sy_}; }
  double scale_x() const { return sx_; }
  double xmin() const { return xmin_; }
  double xmax() const { return xmax_; }
  double ymin() const { return ymin_; }
  double ymax() const { return ymax_; }
  double px() const { return px_; }
  double py() const { return py_; }
  double pw() const { return pw_; }
  double ph() const { return ph_; }
  double diagonal() const { return std::hypot(xmax_ - xmin_, ymax_ - ymin_); }

 private:
  double px_, py_, pw_, ph_;
  double xmin_, xmax_, ymin_, ymax_;
  double sx_ = 1.0, sy_ = 1.0;
};

struct Style {
  std::string stroke;
  double width;
  std::string fill;
  std::string dash;

  Style(std::string stroke = "black", double width = 1.0, std::string fill = "none", std::string dash = "")
      : stroke(std::move(stroke)), width(width), fill(std::move(fill)), dash(std::move(dash)) {}

  std::string attrs() const {
    std::string s = "stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) + "\" fill=\"" + fill + "\"";
    if (!dash.empty()) s += " stroke-dasharray=\"" + dash + "\"";
    return s;
  }
};

class SvgDocument {
 public:
  SvgDocument(double width, double height) : width_(width), height_(height) {}

  /// Subsequent shapes are clipped to the panel until end_panel().
  void begin_panel(const Panel& p) {
    const std::string id = "clip" + std::to_string(++clip_count_);
    body_ << "<clipPath id=\"" << id << "\"><rect x=\"" << fmt(p.px()) << "\" y=\"" << fmt(p.py()) << "\" width=\""
          << fmt(p.pw()) << "\" height=\"" << fmt(p.ph()) << "\"/></clipPath>\n";
    body_ << "<g clip-path=\"url(#" << id << ")\">\n";
  }
  void end_panel() { body_ << "</g>\n"; }

  void circle(const Panel& p, const Circle& c, const Style& s) {
    const Point m = p.map(c.center);
    body_ << "<circle cx=\"" << fmt(m.x) << "\" cy=\"" << fmt(m.y) << "\" r=\"" << fmt(c.radius * p.scale_x())
          << "\" " << s.attrs() << "/>\n";
  }

  void polyline(const Panel& p, const std::vector<Point>& pts, const Style& s, bool closed = false) {
    if (pts.size() < 2) return;
    body_ << (closed ? "<polygon" : "<polyline") << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point m = p.map(pts[i]);
      body_ << (i ? " " : "") << fmt(m.x) << ',' << fmt(m.y);
    }
    body_ << "\" " << s.attrs() << "/>\n";
  }

  void triangle(const Panel& p, const Triangle& t, const Style& s) {
    polyline(p, {t[0], t[1], t[2]}, s, true);
  }

  void segment(const Panel& p, Point a, Point b, const Style& s) { polyline(p, {a, b}, s); }

  void dot(const Panel& p, Point at, const std::string& color, const std::string& label = "", double radius = 2.5) {
    const Point m = p.map(at);
    body_ << "<circle cx=\"" << fmt(m.x) << "\" cy=\"" << fmt(m.y) << "\" r=\"" << fmt(radius) << "\" fill=\"" << color
          << "\"/>\n";
    if (!label.empty()) text(m.x + 4, m.y - 4, label, 11, color);
  }

  /// Text in pixel coordinates.
  void text(double x, double y, const std::string& s, double size = 12, const std::string& color = "black",
            const std::string& anchor = "start") {
    body_ << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" font-family=\"sans-serif\" font-size=\"" << fmt(size)
          << "\" fill=\"" << color << "\" text-anchor=\"" << anchor << "\">" << escape_xml(s) << "</text>\n";
  }

  void frame(const Panel& p) {
    body_ << "<rect x=\"" << fmt(p.px()) << "\" y=\"" << fmt(p.py()) << "\" width=\"" << fmt(p.pw()) << "\" height=\""
          << fmt(p.ph()) << "\" stroke=\"#888888\" stroke-width=\"0.50\" fill=\"none\"/>\n";
  }

  std::string str() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width_, 0) << "\" height=\""
        << fmt(height_, 0) << "\" viewBox=\"0 0 " << fmt(width_, 0) << ' ' << fmt(height_, 0) << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  double width_, height_;
  int clip_count_ = 0;
  std::ostringstream body_;
};

inline constexpr int kConicPoints = 256;

/// Sampled branches of an ellipse (one closed loop) or hyperbola (two arcs reaching past the panel).
inline std::vector<std::vector<Point>> conic_polylines(const CanonicalConic& cc, double reach) {
  const double c = std::cos(cc.angle), s = std::sin(cc.angle);
  auto place = [&](double u, double v) { return Point{cc.center.x + c * u - s * v, cc.center.y + s * u + c * v}; };
  std::vector<std::vector<Point>> out;
  if (cc.kind == ConicKind::Ellipse) {
    std::vector<Point> loop;
    for (int k = 0; k <= kConicPoints; ++k) {
      const double a = 2 * std::numbers::pi * k / kConicPoints;
      loop.push_back(place(cc.semi_major * std::cos(a), cc.semi_minor * std::sin(a)));
    }
    out.push_back(std::move(loop));
  } else if (cc.kind == ConicKind::Hyperbola) {
    const double span = std::asinh(reach / std::min(cc.semi_major, cc.semi_minor)) + 0.5;
    for (double side : {1.0, -1.0}) {
      std::vector<Point> branch;
      for (int k = 0; k < kConicPoints / 2; ++k) {
        const double u = -span + 2 * span * k / (kConicPoints / 2 - 1);
        branch.push_back(place(side * cc.semi_major * std::cosh(u), cc.semi_minor * std::sinh(u)));
      }
      out.push_back(std::move(branch));
    }
  }
  return out;
}

inline void draw_conic(SvgDocument& doc, const Panel& p, const ConicMatrix& m, const Style& s) {
  const CanonicalConic cc = canonicalize(m);
  for (const auto& branch : conic_polylines(cc, p.diagonal() + distance(cc.center, {p.xmin(), p.ymin()}))) {
    doc.polyline(p, branch, s);
  }
}

}  // namespace porism::lab
