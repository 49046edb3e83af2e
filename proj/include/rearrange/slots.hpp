#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rearrange/accessibility.hpp"
#include "rearrange/scene.hpp"

namespace rearrange {

// Retrieval goal of a relocation sequence: the target object or a slot.
// `ignore_id` is set for object subjects (a disc ignores itself during
// corridor checks) and empty for slots.
struct SubjectRef {
  Disc disc;
  std::string ignore_id;

  static SubjectRef for_object(const SceneObject& o) { return {o.disc(), o.id}; }
  static SubjectRef for_slot(const Slot& s) { return {s.disc(), {}}; }
};

struct BetaMap {
  std::map<std::string, int> entries;  // slot id -> beta
};

// Rejection-sample candidate slot centers uniformly in the workspace.
// `trials` counts raw samples, accepted and rejected. Accepted slots are
// returned in acceptance order with state = candidate.
std::vector<Slot> sample_candidate_slots(const Scene& scene, double r_slot,
                                         int trials, std::mt19937_64& rng);

// Classify every non-occupied slot as valid or invalid in place and return
// the valid slot ids in scene order. A slot is valid iff it is reachable and,
// with a virtual object standing in for the dequeued head of `relocation`
// placed there, the rest of the sequence followed by `subject` stays
// sequentially accessible (each element removed after its check).
std::vector<std::string> find_valid_candidates(Scene& scene,
                                               const std::vector<std::string>& relocation,
                                               const SubjectRef& subject,
                                               const AccessParams& params,
                                               Telemetry* telemetry = nullptr);

// Non-occupied slots that are unreachable in the current scene (S_e).
std::vector<std::string> occluded_slots(const Scene& scene,
                                        const AccessParams& params,
                                        Telemetry* telemetry = nullptr);

// beta(s) = number of other valid slots becoming unreachable if a virtual
// object of the slot radius is placed at s.
BetaMap compute_beta(const Scene& scene, const std::vector<std::string>& valid_ids,
                     const AccessParams& params, Telemetry* telemetry = nullptr);

// Append a candidate slot at the footprint an object just vacated, if a full
// slot-radius disc fits there. `former` must already be out of the scene.
std::optional<Slot> mint_vacated_slot(Scene& scene, const SceneObject& former);

}  // namespace rearrange
