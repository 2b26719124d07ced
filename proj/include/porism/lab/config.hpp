#pragma once

// Lab configuration: family selection, sweep grid, tolerances, output location.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "porism/poristic.hpp"

namespace porism::lab {

/// Injected vertex offset for mutation testing: sample `index`, vertex 0, x += eps.
struct Perturbation {
  std::size_t index = 0;
  double eps = 0.0;
};

struct LabConfig {
  std::optional<double> rho;
  std::optional<double> R;
  std::optional<double> r;
  int t_samples = 720;
  double tolerance = 1e-9;
  double angle_tolerance = 1e-8;
  std::uint64_t seed = 1;
  std::string output_dir = ".";
  std::vector<std::string> quantities;
  std::string figure;
  std::optional<Perturbation> perturb;

  PoristicConfig family() const {
    if (R || r) {
      if (!R || !r) throw Error(ErrorCode::InvalidConfig, "--R and --r must be given together");
      return config_from_rR(*R, *r);
    }
    return config_from_rho(rho.value_or(0.36266));
  }

  void validate() const {
    if (rho && (R || r)) throw Error(ErrorCode::InvalidConfig, "give either --rho or --R/--r, not both");
    (void)family();
    if (t_samples < 3) throw Error(ErrorCode::InvalidConfig, "t-samples must be >= 3");
    if (!(tolerance > 0.0) || tolerance > 1e-3) throw Error(ErrorCode::InvalidConfig, "tol must lie in (0, 1e-3]");
    if (perturb && perturb->index >= static_cast<std::size_t>(t_samples)) {
      throw Error(ErrorCode::InvalidConfig, "perturbed sample index out of range");
    }
  }

  /// Uniform grid on [0, 2 pi).
  double t_at(int k) const { return 2.0 * std::numbers::pi * k / t_samples; }
};

/// Parses `key = value` lines; `#` starts a comment.
inline std::map<std::string, std::string> read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::InvalidConfig, path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

}  // namespace porism::lab
