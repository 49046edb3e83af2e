#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace rearrange {

// Global geometric tolerance (cm). Tangency is treated as non-overlapping.
inline constexpr double kGeomEps = 1e-9;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::sqrt(dot(v, v)); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

struct Disc {
  Vec2 center;
  double radius = 0.0;
};

// Shelf-like workspace: rectangle [0,width] x [0,depth], open edge on the
// depth = 0 line, walls on the other three sides. height is metadata only.
struct Workspace {
  double width = 0.0;
  double depth = 0.0;
  double height = 0.0;
};

// Straight approach corridor: the Minkowski sum of the segment from `origin`
// to its exit point on the open edge with a disc of `radius`. `theta` is
// measured from the outward normal of the open edge (0 = straight out),
// positive toward +x. Must satisfy |theta| < pi/2 so the ray exits the
// open edge.
struct Corridor {
  Vec2 origin;
  double theta = 0.0;
  double radius = 0.0;
};

inline Vec2 corridor_direction(double theta) {
  return {std::sin(theta), -std::cos(theta)};
}

// Exit point of the corridor axis on the open-edge line y = 0.
inline Vec2 corridor_exit(const Corridor& c) {
  return {c.origin.x + c.origin.y * std::tan(c.theta), 0.0};
}

double segment_point_distance(Vec2 a, Vec2 b, Vec2 p);

// Strict overlap between open discs; tangency does not count.
bool discs_overlap(const Disc& a, const Disc& b);

// Disc fully inside the workspace rectangle (boundary contact allowed).
bool disc_in_workspace(const Disc& d, const Workspace& w);

// Per-run instrumentation. Counts oracle work, not wall-clock.
struct Telemetry {
  long long corridor_tests = 0;
  long long beta_evals = 0;
  long long relocate_calls = 0;
};

using IdSet = std::unordered_set<std::string>;

struct Scene;  // scene.hpp

// True iff the corridor capsule intersects neither a non-ignored object disc
// nor the side/back walls. The open edge imposes no constraint.
bool corridor_clear(const Corridor& c, const Scene& scene, const IdSet& ignore,
                    Telemetry* telemetry = nullptr);

// True iff the corridor capsule overlaps disc d (strict).
bool corridor_hits_disc(const Corridor& c, const Disc& d);

}  // namespace rearrange
