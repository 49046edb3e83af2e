#pragma once

#include "rearrange/scene.hpp"

namespace rearrange::testing {

inline SceneObject obj(const std::string& id, double x, double y,
                       Role role = Role::Obstacle, double r = 3.5) {
  return {id, {x, y}, r, role};
}

inline Slot slot(const std::string& id, double x, double y, double r = 3.5) {
  return {id, {x, y}, r, SlotState::Candidate};
}

// Hand-built monotone example: target cornered behind a two-object column,
// flanked so every escape fan crosses at least two objects. One valid slot
// s0 in the open, one occluded slot s1 directly behind o0. The plan must be
// o0 -> s1 (acquisition), o2 -> s2 (minted at o0's footprint, beta 0),
// o1 -> s0.
inline Scene make_monotone_scene() {
  Scene s;
  s.workspace = {90.0, 45.0, 45.0};
  s.objects = {
      obj("ot", 10.0, 38.0, Role::Target),
      obj("o0", 70.0, 22.5),               // sole occluder of s1
      obj("o1", 10.0, 27.0),               // column, middle
      obj("o2", 10.0, 16.0),               // column, front
      obj("o3", 18.4853, 29.5147),         // near flanker
      obj("o4", 28.39, 22.57),             // far flanker
      obj("o5", 41.81, 12.24),             // closes s2's leftmost approach
  };
  s.slots = {slot("s0", 70.0, 15.0), slot("s1", 70.0, 30.0)};
  return s;
}

// Hand-built non-monotone example: no valid slot at the start (s1 occluded
// by the o2/o0 column, s0 sits in the target's only escape fan), yet
// |O_R| <= |S_c|. The acquisition branch must move o2 -> s0 then o0 -> s1;
// o2 later moves a second time.
inline Scene make_non_monotone_scene() {
  Scene s;
  s.workspace = {90.0, 45.0, 45.0};
  s.objects = {
      obj("ot", 10.0, 38.0, Role::Target),
      obj("o0", 70.0, 28.5),               // inner occluder of s1
      obj("o1", 10.0, 27.0),               // blocks the target's escape fan
      obj("o2", 70.0, 21.0),               // front occluder of s1
      obj("o3", 18.4853, 29.5147),         // flanker
      obj("o4", 28.39, 22.57),             // flanker
  };
  s.slots = {slot("s0", 10.0, 16.0), slot("s1", 70.0, 36.0)};
  return s;
}

}  // namespace rearrange::testing
