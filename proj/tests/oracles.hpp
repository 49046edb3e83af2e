#pragma once

// Test-only oracles, kept independent of the library's collision path.

#include <random>

#include "rearrange/scene.hpp"

namespace rearrange::testing {

// Brute-force corridor check: sample points of the swept region and look for
// one that lies inside a non-ignored object disc or outside the side/back
// walls. Samples are a mix of uniform draws over the capsule (axis point plus
// an offset inside the corridor radius, so every sample is in the region by
// construction) and probe points pushed from the axis toward each obstacle
// and toward the walls, so thin overlaps are not missed.
inline bool corridor_clear_sampling_oracle(const Corridor& c, const Scene& scene,
                                           const IdSet& ignore,
                                           int total_points = 10000,
                                           std::uint64_t seed = 12345) {
  const Vec2 exit = corridor_exit(c);
  const Workspace& w = scene.workspace;

  const auto violates = [&](Vec2 p) {
    // Beyond the open edge there is nothing to hit.
    if (p.y < 0.0) return false;
    if (p.x < 0.0 || p.x > w.width || p.y > w.depth) return true;
    for (const auto& o : scene.objects) {
      if (ignore.count(o.id) > 0) continue;
      if (distance(p, o.center) < o.radius) return true;
    }
    return false;
  };

  // Probe points: walk the axis and push to the capsule boundary toward each
  // obstacle center and toward both side walls and the back wall.
  const int axis_steps = 500;
  for (int i = 0; i <= axis_steps; ++i) {
    const double t = static_cast<double>(i) / axis_steps;
    const Vec2 a = c.origin + t * (exit - c.origin);
    for (const auto& o : scene.objects) {
      if (ignore.count(o.id) > 0) continue;
      const Vec2 d = o.center - a;
      const double n = norm(d);
      const Vec2 q = n > 1e-12 ? a + (c.radius / n) * d : a;
      if (violates(q)) return false;
    }
    if (violates({a.x - c.radius, a.y})) return false;
    if (violates({a.x + c.radius, a.y})) return false;
    if (violates({a.x, a.y + c.radius})) return false;
  }

  // Refined probes: ternary-search the axis parameter for the closest
  // approach to each obstacle, then push to the capsule boundary there.
  for (const auto& o : scene.objects) {
    if (ignore.count(o.id) > 0) continue;
    double lo = 0.0, hi = 1.0;
    const auto dist_at = [&](double t) {
      return distance(c.origin + t * (exit - c.origin), o.center);
    };
    for (int it = 0; it < 200; ++it) {
      const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (dist_at(m1) < dist_at(m2))
        hi = m2;
      else
        lo = m1;
    }
    const Vec2 a = c.origin + 0.5 * (lo + hi) * (exit - c.origin);
    const Vec2 d = o.center - a;
    const double n = norm(d);
    const Vec2 q = n > 1e-12 ? a + (c.radius / n) * d : a;
    if (violates(q)) return false;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  std::uniform_real_distribution<double> uo(-c.radius, c.radius);
  for (int kept = 0; kept < total_points;) {
    const Vec2 off{uo(rng), uo(rng)};
    if (off.x * off.x + off.y * off.y > c.radius * c.radius) continue;
    const Vec2 a = c.origin + ut(rng) * (exit - c.origin);
    ++kept;
    if (violates(a + off)) return false;
  }
  return true;
}

}  // namespace rearrange::testing
