#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rearrange/geometry.hpp"

namespace rearrange {

enum class Role { Obstacle, Target };

std::string to_string(Role r);
Role role_from_string(const std::string& s);

struct SceneObject {
  std::string id;
  Vec2 center;
  double radius = 0.0;
  Role role = Role::Obstacle;

  Disc disc() const { return {center, radius}; }
};

enum class SlotState { Candidate, Valid, Invalid, Occupied };

std::string to_string(SlotState s);
SlotState slot_state_from_string(const std::string& s);

struct Slot {
  std::string id;
  Vec2 center;
  double radius = 0.0;
  SlotState state = SlotState::Candidate;

  Disc disc() const { return {center, radius}; }
};

struct Scene {
  Workspace workspace;
  std::vector<SceneObject> objects;
  std::vector<Slot> slots;
  std::uint64_t seed = 0;

  const SceneObject* find_object(const std::string& id) const;
  SceneObject* find_object(const std::string& id);
  const Slot* find_slot(const std::string& id) const;
  Slot* find_slot(const std::string& id);

  // The unique object with role Target. Throws if absent.
  const SceneObject& target() const;

  // Uniform slot radius: the largest object radius in the scene.
  double slot_radius() const;

  void remove_object(const std::string& id);

  // Non-occupied slot count (the |S_c| of the solvability gate).
  int candidate_slot_count() const;

  nlohmann::json to_json() const;
  static Scene from_json(const nlohmann::json& j);
};

// Scene-level consistency: objects inside workspace, pairwise non-overlap,
// exactly one target. Throws std::invalid_argument on violation.
void check_scene(const Scene& scene);

}  // namespace rearrange
