#include "rearrange/geometry.hpp"

#include <algorithm>

#include "rearrange/scene.hpp"

namespace rearrange {

double segment_point_distance(Vec2 a, Vec2 b, Vec2 p) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 <= 0.0) return distance(a, p);
  double t = dot(p - a, ab) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance(a + t * ab, p);
}

bool discs_overlap(const Disc& a, const Disc& b) {
  return distance(a.center, b.center) < a.radius + b.radius - kGeomEps;
}

bool disc_in_workspace(const Disc& d, const Workspace& w) {
  return d.center.x >= d.radius - kGeomEps &&
         d.center.x <= w.width - d.radius + kGeomEps &&
         d.center.y >= d.radius - kGeomEps &&
         d.center.y <= w.depth - d.radius + kGeomEps;
}

bool corridor_hits_disc(const Corridor& c, const Disc& d) {
  const Vec2 exit = corridor_exit(c);
  const double dist = segment_point_distance(c.origin, exit, d.center);
  return dist < c.radius + d.radius - kGeomEps;
}

bool corridor_clear(const Corridor& c, const Scene& scene, const IdSet& ignore,
                    Telemetry* telemetry) {
  if (telemetry != nullptr) ++telemetry->corridor_tests;

  const Vec2 exit = corridor_exit(c);
  const Workspace& w = scene.workspace;

  // Side and back walls. The open edge (y = 0) imposes no constraint.
  const double xlo = std::min(c.origin.x, exit.x);
  const double xhi = std::max(c.origin.x, exit.x);
  const double yhi = std::max(c.origin.y, exit.y);
  if (xlo < c.radius - kGeomEps) return false;
  if (xhi > w.width - c.radius + kGeomEps) return false;
  if (yhi > w.depth - c.radius + kGeomEps) return false;

  for (const SceneObject& obj : scene.objects) {
    if (ignore.count(obj.id) > 0) continue;
    if (corridor_hits_disc(c, obj.disc())) return false;
  }
  return true;
}

}  // namespace rearrange
