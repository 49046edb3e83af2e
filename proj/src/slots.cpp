#include "rearrange/slots.hpp"

#include <algorithm>

namespace rearrange {

namespace {

bool slot_disc_fits(const Disc& d, const Scene& scene) {
  if (!disc_in_workspace(d, scene.workspace)) return false;
  for (const auto& o : scene.objects)
    if (discs_overlap(d, o.disc())) return false;
  for (const auto& s : scene.slots)
    if (discs_overlap(d, s.disc())) return false;
  return true;
}

std::string next_slot_id(const Scene& scene, int offset) {
  int n = static_cast<int>(scene.slots.size()) + offset;
  while (scene.find_slot("s" + std::to_string(n)) != nullptr) ++n;
  return "s" + std::to_string(n);
}

}  // namespace

std::vector<Slot> sample_candidate_slots(const Scene& scene, double r_slot,
                                         int trials, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ux(r_slot, scene.workspace.width - r_slot);
  std::uniform_real_distribution<double> uy(r_slot, scene.workspace.depth - r_slot);

  std::vector<Slot> accepted;
  for (int t = 0; t < trials; ++t) {
    const Disc d{{ux(rng), uy(rng)}, r_slot};
    bool free = slot_disc_fits(d, scene);
    for (const auto& s : accepted)
      if (free && discs_overlap(d, s.disc())) free = false;
    if (!free) continue;
    Slot slot;
    slot.id = "s" + std::to_string(scene.slots.size() + accepted.size());
    slot.center = d.center;
    slot.radius = r_slot;
    slot.state = SlotState::Candidate;
    accepted.push_back(slot);
  }
  return accepted;
}

std::vector<std::string> find_valid_candidates(Scene& scene,
                                               const std::vector<std::string>& relocation,
                                               const SubjectRef& subject,
                                               const AccessParams& params,
                                               Telemetry* telemetry) {
  std::vector<std::string> valid;
  const double r_slot = scene.slot_radius();

  for (Slot& slot : scene.slots) {
    if (slot.state == SlotState::Occupied) continue;
    slot.state = SlotState::Invalid;

    if (!is_accessible(slot.disc(), scene, {}, params, telemetry)) continue;

    // The virtual object stands in for the head of the relocation sequence,
    // which is about to be placed here; the head leaves its old footprint.
    Scene copy = scene;
    std::vector<std::string> rest = relocation;
    if (!rest.empty()) {
      copy.remove_object(rest.front());
      rest.erase(rest.begin());
    }
    copy.objects.push_back(
        {"__virtual", slot.center, r_slot, Role::Obstacle});

    bool ok = true;
    for (const auto& id : rest) {
      const SceneObject* o = copy.find_object(id);
      if (o == nullptr || !is_accessible(o->disc(), copy, {id}, params, telemetry)) {
        ok = false;
        break;
      }
      copy.remove_object(id);
    }
    if (ok) {
      IdSet ignore;
      if (!subject.ignore_id.empty()) ignore.insert(subject.ignore_id);
      ok = is_accessible(subject.disc, copy, ignore, params, telemetry);
    }
    if (ok) {
      slot.state = SlotState::Valid;
      valid.push_back(slot.id);
    }
  }
  return valid;
}

std::vector<std::string> occluded_slots(const Scene& scene,
                                        const AccessParams& params,
                                        Telemetry* telemetry) {
  std::vector<std::string> occluded;
  for (const Slot& slot : scene.slots) {
    if (slot.state == SlotState::Occupied) continue;
    if (!is_accessible(slot.disc(), scene, {}, params, telemetry))
      occluded.push_back(slot.id);
  }
  return occluded;
}

BetaMap compute_beta(const Scene& scene, const std::vector<std::string>& valid_ids,
                     const AccessParams& params, Telemetry* telemetry) {
  BetaMap beta;
  const double r_slot = scene.slot_radius();
  for (const auto& si : valid_ids) {
    if (telemetry != nullptr) ++telemetry->beta_evals;
    Scene copy = scene;
    copy.objects.push_back(
        {"__virtual", scene.find_slot(si)->center, r_slot, Role::Obstacle});
    int b = 0;
    for (const auto& sj : valid_ids) {
      if (sj == si) continue;
      if (!is_accessible(scene.find_slot(sj)->disc(), copy, {}, params, telemetry))
        ++b;
    }
    beta.entries[si] = b;
  }
  return beta;
}

std::optional<Slot> mint_vacated_slot(Scene& scene, const SceneObject& former) {
  const double r_slot = scene.slot_radius();
  const Disc d{former.center, r_slot};
  if (!slot_disc_fits(d, scene)) return std::nullopt;
  Slot slot;
  slot.id = next_slot_id(scene, 0);
  slot.center = former.center;
  slot.radius = r_slot;
  slot.state = SlotState::Candidate;
  scene.slots.push_back(slot);
  return slot;
}

}  // namespace rearrange
