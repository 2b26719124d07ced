#pragma once

// Sweep statistics, invariance verdicts, and the JSON/CSV report writers.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace porism::lab {

enum class Verdict { Invariant, Varying, Skipped };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Invariant: return "Invariant";
    case Verdict::Varying: return "Varying";
    case Verdict::Skipped: return "Skipped";
  }
  return "?";
}

/// Spread: the value itself is swept and must (not) stay constant.
/// Residual: the value is a deviation from an identity and must stay below tolerance.
enum class Mode { Spread, Residual };

constexpr std::string_view to_string(Mode m) { return m == Mode::Spread ? "spread" : "residual"; }

/// Running min/max/mean; combine() is associative so partial sweeps can be merged.
struct Accumulator {
  std::size_t count = 0;
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;

  void add(double v) {
    ++count;
    min = std::min(min, v);
    max = std::max(max, v);
    sum += v;
  }

  void combine(const Accumulator& o) {
    count += o.count;
    min = std::min(min, o.min);
    max = std::max(max, o.max);
    sum += o.sum;
  }

  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
};

struct SweepReport {
  std::string quantity;
  std::size_t samples = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double spread_rel = 0.0;
  Verdict verdict = Verdict::Skipped;
  double tolerance = 0.0;
  Verdict expected = Verdict::Invariant;
  Mode mode = Mode::Spread;
  std::optional<double> target;
  /// Relative distance of the mean from the target (spread mode).
  std::optional<double> target_error;
  std::string note;

  bool passed() const { return verdict == expected || verdict == Verdict::Skipped; }
};

/// Spread mode: Invariant iff spread_rel < tol and, when a target is given,
/// |mean - target| / |target| < tol.
inline SweepReport make_spread_report(std::string name, const Accumulator& acc, double tol, Verdict expected,
                                      std::optional<double> target = std::nullopt) {
  SweepReport r;
  r.quantity = std::move(name);
  r.samples = acc.count;
  r.tolerance = tol;
  r.expected = expected;
  r.mode = Mode::Spread;
  r.target = target;
  if (acc.count == 0) return r;
  r.min = acc.min;
  r.max = acc.max;
  r.mean = acc.mean();
  const double scale = std::abs(r.mean);
  r.spread_rel = scale > 0.0 ? (r.max - r.min) / scale : (r.max - r.min);
  bool invariant = r.spread_rel < tol;
  if (target) {
    r.target_error = std::abs(r.mean - *target) / std::max(std::abs(*target), std::numeric_limits<double>::min());
    invariant = invariant && *r.target_error < tol;
  }
  r.verdict = invariant ? Verdict::Invariant : Verdict::Varying;
  return r;
}

/// Residual mode: values are absolute deviations; Invariant iff max |value| < tol.
inline SweepReport make_residual_report(std::string name, const Accumulator& acc, double tol) {
  SweepReport r;
  r.quantity = std::move(name);
  r.samples = acc.count;
  r.tolerance = tol;
  r.expected = Verdict::Invariant;
  r.mode = Mode::Residual;
  r.target = 0.0;
  if (acc.count == 0) return r;
  r.min = acc.min;
  r.max = acc.max;
  r.mean = acc.mean();
  r.spread_rel = r.max - r.min;
  r.verdict = std::max(std::abs(r.min), std::abs(r.max)) < tol ? Verdict::Invariant : Verdict::Varying;
  return r;
}

/// Shortest round-trip decimal form, 17 significant digits.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline nlohmann::ordered_json to_json(const SweepReport& r) {
  nlohmann::ordered_json j;
  j["quantity"] = r.quantity;
  j["mode"] = to_string(r.mode);
  j["samples"] = r.samples;
  j["min"] = r.min;
  j["max"] = r.max;
  j["mean"] = r.mean;
  j["spread_rel"] = r.spread_rel;
  j["tolerance"] = r.tolerance;
  j["target"] = r.target ? nlohmann::ordered_json(*r.target) : nlohmann::ordered_json(nullptr);
  j["target_error"] = r.target_error ? nlohmann::ordered_json(*r.target_error) : nlohmann::ordered_json(nullptr);
  j["expected"] = to_string(r.expected);
  j["verdict"] = to_string(r.verdict);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline std::string reports_csv(const std::vector<SweepReport>& reports) {
  std::ostringstream out;
  out << "quantity,mode,samples,min,max,mean,spread_rel,tolerance,target,expected,verdict\n";
  for (const SweepReport& r : reports) {
    out << r.quantity << ',' << to_string(r.mode) << ',' << r.samples << ',' << format_double(r.min) << ','
        << format_double(r.max) << ',' << format_double(r.mean) << ',' << format_double(r.spread_rel) << ','
        << format_double(r.tolerance) << ',' << (r.target ? format_double(*r.target) : "") << ','
        << to_string(r.expected) << ',' << to_string(r.verdict) << '\n';
  }
  return out.str();
}

}  // namespace porism::lab
