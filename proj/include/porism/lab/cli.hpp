#pragma once

// `porism-lab verify|sweep|figure` command-line front end.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "porism/lab/config.hpp"
#include "porism/lab/figures.hpp"
#include "porism/lab/quantities.hpp"
#include "porism/lab/report.hpp"
#include "porism/lab/verify.hpp"

namespace porism::lab {

enum ExitCode : int { kExitPass = 0, kExitVerdictFailure = 1, kExitUsage = 2 };

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

inline Perturbation parse_perturbation(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidConfig, "perturb expects IDX:EPS");
  try {
    std::size_t used = 0;
    const long idx = std::stol(spec.substr(0, colon), &used);
    if (used != colon || idx < 0) throw Error(ErrorCode::InvalidConfig, "perturb index must be a non-negative integer");
    const std::string eps_text = spec.substr(colon + 1);
    const double eps = std::stod(eps_text, &used);
    if (used != eps_text.size()) throw Error(ErrorCode::InvalidConfig, "perturb eps must be a number");
    return {static_cast<std::size_t>(idx), eps};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidConfig, "perturb expects IDX:EPS");
  }
}

/// Command-line values; unset fields fall back to the config file, then to defaults.
struct Flags {
  std::optional<double> rho, R, r, tol, angle_tol;
  std::optional<int> t_samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out, quantities, figure, perturb;
  std::string config_file;
};

inline void apply_key_values(LabConfig& cfg, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    try {
      if (key == "rho") cfg.rho = std::stod(value);
      else if (key == "R") cfg.R = std::stod(value);
      else if (key == "r") cfg.r = std::stod(value);
      else if (key == "t-samples" || key == "t_samples") cfg.t_samples = std::stoi(value);
      else if (key == "tol") cfg.tolerance = std::stod(value);
      else if (key == "angle-tol" || key == "angle_tol") cfg.angle_tolerance = std::stod(value);
      else if (key == "seed") cfg.seed = std::stoull(value);
      else if (key == "out") cfg.output_dir = value;
      else if (key == "quantities") cfg.quantities = split_list(value);
      else if (key == "figure") cfg.figure = value;
      else throw Error(ErrorCode::InvalidConfig, "unknown config key '" + key + "'");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidConfig, "bad value for '" + key + "': " + value);
    }
  }
}

inline LabConfig resolve_config(const Flags& f) {
  LabConfig cfg;
  if (!f.config_file.empty()) {
    apply_key_values(cfg, read_key_value_file(f.config_file));
    // a family given on the command line replaces the file's family entirely
    if (f.rho || f.R || f.r) {
      cfg.rho.reset();
      cfg.R.reset();
      cfg.r.reset();
    }
  }
  if (f.rho) cfg.rho = f.rho;
  if (f.R) cfg.R = f.R;
  if (f.r) cfg.r = f.r;
  if (f.t_samples) cfg.t_samples = *f.t_samples;
  if (f.tol) cfg.tolerance = *f.tol;
  if (f.angle_tol) cfg.angle_tolerance = *f.angle_tol;
  if (f.seed) cfg.seed = *f.seed;
  if (f.out) cfg.output_dir = *f.out;
  if (f.quantities) cfg.quantities = split_list(*f.quantities);
  if (f.figure) cfg.figure = *f.figure;
  if (f.perturb) cfg.perturb = parse_perturbation(*f.perturb);
  cfg.validate();
  return cfg;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidConfig, "cannot write " + path.string());
  out << content;
}

inline int cmd_verify(const LabConfig& cfg, std::ostream& out) {
  const VerifyResult res = run_verify(cfg);
  const std::filesystem::path dir(cfg.output_dir);
  write_file(dir / "report.json", report_json(cfg, res).dump(2) + "\n");
  write_file(dir / "report.csv", reports_csv(res.reports));
  int invariant = 0, varying = 0, skipped = 0, failed = 0;
  for (const SweepReport& r : res.reports) {
    if (r.verdict == Verdict::Invariant) ++invariant;
    if (r.verdict == Verdict::Varying) ++varying;
    if (r.verdict == Verdict::Skipped) ++skipped;
    if (!r.passed()) {
      ++failed;
      out << "MISMATCH " << r.quantity << ": expected " << to_string(r.expected) << ", got " << to_string(r.verdict)
          << " (" << to_string(r.mode) << ' ' << format_double(r.mode == Mode::Spread ? r.spread_rel : r.max)
          << ", tol " << format_double(r.tolerance) << ")\n";
    }
  }
  for (const auto& [name, flag] : res.flags.items()) out << "flag " << name << ": " << flag.dump() << '\n';
  out << "rows: " << res.reports.size() << " (invariant " << invariant << ", varying " << varying << ", skipped "
      << skipped << "), mismatches: " << failed << '\n';
  out << "wrote " << (dir / "report.json").string() << " and " << (dir / "report.csv").string() << '\n';
  return res.passed() ? kExitPass : kExitVerdictFailure;
}

inline int cmd_sweep(const LabConfig& cfg, std::ostream& out) {
  std::vector<const Quantity*> qs;
  for (const std::string& name : cfg.quantities) qs.push_back(&find_quantity(name));
  const PoristicConfig fam = cfg.family();
  std::ostringstream csv, skips;
  csv << 't';
  for (const Quantity* q : qs) csv << ',' << q->name;
  csv << '\n';
  skips << "t,quantity,reason\n";
  if (!qs.empty()) {
    for (int k = 0; k < cfg.t_samples; ++k) {
      FamilySample s = sample(fam, cfg.t_at(k));
      if (cfg.perturb && cfg.perturb->index == static_cast<std::size_t>(k)) s = perturbed(s, cfg.perturb->eps);
      csv << format_double(s.t);
      for (const Quantity* q : qs) {
        csv << ',';
        if (q->needs_scalene && near_isosceles(s.t)) {
          skips << format_double(s.t) << ',' << q->name << ",isosceles sample\n";
          continue;
        }
        try {
          csv << format_double(q->eval(fam, s));
        } catch (const Error& e) {
          skips << format_double(s.t) << ',' << q->name << ",\"" << e.what() << "\"\n";
        }
      }
      csv << '\n';
    }
  }
  const std::filesystem::path dir(cfg.output_dir);
  write_file(dir / "sweep.csv", csv.str());
  write_file(dir / "sweep_skips.csv", skips.str());
  out << "wrote " << (dir / "sweep.csv").string() << '\n';
  return kExitPass;
}

inline int cmd_figure(const LabConfig& cfg, std::ostream& out) {
  if (cfg.figure.empty()) throw Error(ErrorCode::UnknownFigure, "--figure is required");
  const std::string svg = figure_svg(cfg.figure, cfg.family());
  const std::filesystem::path path = std::filesystem::path(cfg.output_dir) / (cfg.figure + ".svg");
  write_file(path, svg);
  out << "wrote " << path.string() << '\n';
  return kExitPass;
}

inline void add_common_options(CLI::App& sub, Flags& f) {
  sub.add_option("--rho", f.rho, "r/R in (0, 1/2]");
  sub.add_option("--R", f.R, "circumradius (with --r)");
  sub.add_option("--r", f.r, "inradius (with --R)");
  sub.add_option("--t-samples", f.t_samples, "samples of t on [0, 2pi), >= 3 (default 720)");
  sub.add_option("--tol", f.tol, "relative invariance tolerance in (0, 1e-3] (default 1e-9)");
  sub.add_option("--angle-tol", f.angle_tol, "angle and reflection-law tolerance in radians (default 1e-8)");
  sub.add_option("--seed", f.seed, "seed for randomized checks (default 1)");
  sub.add_option("--out", f.out, "output directory (default .)");
  sub.add_option("--quantities", f.quantities, "comma-separated quantity names (sweep)");
  sub.add_option("--figure", f.figure, "figure id (figure)");
  sub.add_option("--config", f.config_file, "key = value file; command-line flags take precedence");
  sub.add_option("--perturb", f.perturb, "IDX:EPS, shift vertex 0 of sample IDX by EPS along x");
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Poristic triangle family lab: invariance sweeps, reports and figures", "porism-lab"};
  app.require_subcommand(1);
  Flags flags;
  std::string quantities_help = "quantities:";
  for (const Quantity& q : quantity_registry()) quantities_help += " " + q.name;
  CLI::App* verify = app.add_subcommand("verify", "run the invariance suite; writes report.json and report.csv");
  CLI::App* sweep = app.add_subcommand("sweep", "tabulate quantities over t; writes sweep.csv")->footer(quantities_help);
  CLI::App* figure = app.add_subcommand("figure", "render an SVG figure");
  for (CLI::App* sub : {verify, sweep, figure}) add_common_options(*sub, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const LabConfig cfg = resolve_config(flags);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (sweep->parsed()) return cmd_sweep(cfg, out);
    return cmd_figure(cfg, out);
  } catch (const Error& e) {
    err << "porism-lab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "porism-lab: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace porism::lab
