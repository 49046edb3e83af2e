#include "rearrange/scene.hpp"

#include <algorithm>

namespace rearrange {

std::string to_string(Role r) {
  return r == Role::Target ? "target" : "obstacle";
}

Role role_from_string(const std::string& s) {
  if (s == "target") return Role::Target;
  if (s == "obstacle") return Role::Obstacle;
  throw std::invalid_argument("unknown role: " + s);
}

std::string to_string(SlotState s) {
  switch (s) {
    case SlotState::Candidate: return "candidate";
    case SlotState::Valid: return "valid";
    case SlotState::Invalid: return "invalid";
    case SlotState::Occupied: return "occupied";
  }
  return "candidate";
}

SlotState slot_state_from_string(const std::string& s) {
  if (s == "candidate") return SlotState::Candidate;
  if (s == "valid") return SlotState::Valid;
  if (s == "invalid") return SlotState::Invalid;
  if (s == "occupied") return SlotState::Occupied;
  throw std::invalid_argument("unknown slot state: " + s);
}

const SceneObject* Scene::find_object(const std::string& id) const {
  for (const auto& o : objects)
    if (o.id == id) return &o;
  return nullptr;
}

SceneObject* Scene::find_object(const std::string& id) {
  for (auto& o : objects)
    if (o.id == id) return &o;
  return nullptr;
}

const Slot* Scene::find_slot(const std::string& id) const {
  for (const auto& s : slots)
    if (s.id == id) return &s;
  return nullptr;
}

Slot* Scene::find_slot(const std::string& id) {
  for (auto& s : slots)
    if (s.id == id) return &s;
  return nullptr;
}

const SceneObject& Scene::target() const {
  for (const auto& o : objects)
    if (o.role == Role::Target) return o;
  throw std::invalid_argument("scene has no target object");
}

double Scene::slot_radius() const {
  double r = 0.0;
  for (const auto& o : objects) r = std::max(r, o.radius);
  return r;
}

void Scene::remove_object(const std::string& id) {
  objects.erase(std::remove_if(objects.begin(), objects.end(),
                               [&](const SceneObject& o) { return o.id == id; }),
                objects.end());
}

int Scene::candidate_slot_count() const {
  int n = 0;
  for (const auto& s : slots)
    if (s.state != SlotState::Occupied) ++n;
  return n;
}

nlohmann::json Scene::to_json() const {
  nlohmann::json j;
  j["workspace"] = {{"w", workspace.width},
                    {"d", workspace.depth},
                    {"h", workspace.height}};
  j["objects"] = nlohmann::json::array();
  for (const auto& o : objects) {
    j["objects"].push_back({{"id", o.id},
                            {"x", o.center.x},
                            {"y", o.center.y},
                            {"r", o.radius},
                            {"role", to_string(o.role)}});
  }
  j["slots"] = nlohmann::json::array();
  for (const auto& s : slots) {
    j["slots"].push_back({{"id", s.id},
                          {"x", s.center.x},
                          {"y", s.center.y},
                          {"r", s.radius},
                          {"state", to_string(s.state)}});
  }
  j["seed"] = seed;
  return j;
}

Scene Scene::from_json(const nlohmann::json& j) {
  Scene scene;
  const auto& w = j.at("workspace");
  scene.workspace.width = w.at("w").get<double>();
  scene.workspace.depth = w.at("d").get<double>();
  scene.workspace.height = w.value("h", 0.0);
  for (const auto& jo : j.at("objects")) {
    SceneObject o;
    o.id = jo.at("id").get<std::string>();
    o.center = {jo.at("x").get<double>(), jo.at("y").get<double>()};
    o.radius = jo.at("r").get<double>();
    o.role = role_from_string(jo.at("role").get<std::string>());
    scene.objects.push_back(o);
  }
  if (j.contains("slots")) {
    for (const auto& js : j.at("slots")) {
      Slot s;
      s.id = js.at("id").get<std::string>();
      s.center = {js.at("x").get<double>(), js.at("y").get<double>()};
      s.radius = js.at("r").get<double>();
      s.state = slot_state_from_string(js.value("state", "candidate"));
      scene.slots.push_back(s);
    }
  }
  scene.seed = j.value("seed", std::uint64_t{0});
  return scene;
}

void check_scene(const Scene& scene) {
  if (scene.workspace.width <= 0.0 || scene.workspace.depth <= 0.0)
    throw std::invalid_argument("workspace dimensions must be positive");
  int targets = 0;
  for (const auto& o : scene.objects) {
    if (o.radius <= 0.0)
      throw std::invalid_argument("object " + o.id + " has non-positive radius");
    if (!disc_in_workspace(o.disc(), scene.workspace))
      throw std::invalid_argument("object " + o.id + " penetrates a wall");
    if (o.role == Role::Target) ++targets;
  }
  if (targets != 1)
    throw std::invalid_argument("scene must contain exactly one target");
  for (std::size_t i = 0; i < scene.objects.size(); ++i) {
    for (std::size_t k = i + 1; k < scene.objects.size(); ++k) {
      if (discs_overlap(scene.objects[i].disc(), scene.objects[k].disc()))
        throw std::invalid_argument("objects " + scene.objects[i].id + " and " +
                                    scene.objects[k].id + " overlap");
    }
  }
}

}  // namespace rearrange
