#pragma once

#include <cmath>
#include <random>

#include "porism/centers.hpp"

namespace testing_support {

/// Random well-shaped triangle: every angle at least `min_angle` radians and no two sides within 1e-3 relative.
inline porism::Triangle random_triangle(std::mt19937_64& rng, double min_angle = 0.15) {
  std::uniform_real_distribution<double> pos(-5.0, 5.0);
  for (;;) {
    const porism::Point a{pos(rng), pos(rng)}, b{pos(rng), pos(rng)}, c{pos(rng), pos(rng)};
    try {
      const porism::Triangle t(a, b, c);
      const porism::SideLengths s = porism::side_lengths(t);
      const double p = s.perimeter();
      if (std::min({std::abs(s.s1 - s.s2), std::abs(s.s2 - s.s3), std::abs(s.s3 - s.s1)}) < 1e-3 * p) continue;
      bool ok = true;
      for (int i = 0; i < 3; ++i) {
        const porism::Point u = t[(i + 1) % 3] - t[i], v = t[(i + 2) % 3] - t[i];
        const double ang = std::acos(porism::dot(u, v) / (porism::norm(u) * porism::norm(v)));
        ok = ok && ang > min_angle;
      }
      if (ok) return t;
    } catch (const porism::Error&) {
    }
  }
}

}  // namespace testing_support
