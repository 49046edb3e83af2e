#include "rearrange/planner.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace rearrange {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Proposed: return "proposed";
    case Strategy::Deepest: return "deepest";
    case Strategy::Farthest: return "farthest";
  }
  return "proposed";
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "proposed") return Strategy::Proposed;
  if (s == "deepest") return Strategy::Deepest;
  if (s == "farthest") return Strategy::Farthest;
  throw std::invalid_argument("unknown strategy: " + s);
}

std::string to_string(FailReason r) {
  switch (r) {
    case FailReason::None: return "none";
    case FailReason::InsufficientSpace: return "insufficient-space";
    case FailReason::NoOccludedSlots: return "no-occluded-slots";
    case FailReason::InsufficientAcquisitionSlots:
      return "insufficient-acquisition-slots";
    case FailReason::InfeasibleRelocation: return "infeasible-relocation";
    case FailReason::Timeout: return "timeout";
    case FailReason::NonMonotoneRequired: return "non-monotone-required";
  }
  return "none";
}

namespace {

FailReason fail_reason_from_string(const std::string& s) {
  for (FailReason r : {FailReason::None, FailReason::InsufficientSpace,
                       FailReason::NoOccludedSlots,
                       FailReason::InsufficientAcquisitionSlots,
                       FailReason::InfeasibleRelocation, FailReason::Timeout,
                       FailReason::NonMonotoneRequired}) {
    if (to_string(r) == s) return r;
  }
  throw std::invalid_argument("unknown fail reason: " + s);
}

struct CandidateDirection {
  std::size_t bin_index = 0;
  double edge_sum = 0.0;
  std::vector<std::string> blockers;
};

// Distinct blocker sets of the histogram, fewest blockers first (ties by
// blocker proximity to the open edge, then bin index).
std::vector<CandidateDirection> candidate_directions(const DirectionHistogram& hist,
                                                     const Scene& scene) {
  std::vector<CandidateDirection> dirs;
  for (std::size_t i = 0; i < hist.bins.size(); ++i) {
    const auto& blockers = hist.bins[i].blockers;
    if (std::any_of(dirs.begin(), dirs.end(), [&](const CandidateDirection& d) {
          return d.blockers == blockers;
        }))
      continue;
    CandidateDirection d;
    d.bin_index = i;
    d.blockers = blockers;
    for (const auto& id : blockers) d.edge_sum += scene.find_object(id)->center.y;
    dirs.push_back(std::move(d));
  }
  std::stable_sort(dirs.begin(), dirs.end(),
                   [](const CandidateDirection& a, const CandidateDirection& b) {
                     if (a.blockers.size() != b.blockers.size())
                       return a.blockers.size() < b.blockers.size();
                     if (a.edge_sum != b.edge_sum) return a.edge_sum < b.edge_sum;
                     return a.bin_index < b.bin_index;
                   });
  return dirs;
}

// Greedy minimum-blocker-direction clearing with recursive repair. On success
// removes the cleared objects from `scene` and appends their ids to `seq`.
bool clear_subject(Scene& scene, const Disc& subject, const IdSet& subject_ignore,
                   const IdSet& visited, int depth, const std::string& target_id,
                   const AccessParams& params, Telemetry* telemetry,
                   std::vector<std::string>& seq) {
  if (telemetry != nullptr) ++telemetry->relocate_calls;
  if (depth > static_cast<int>(scene.objects.size())) return false;
  if (is_accessible(subject, scene, subject_ignore, params, telemetry)) return true;

  const DirectionHistogram hist =
      build_histogram(subject, scene, subject_ignore, params, telemetry);
  for (const CandidateDirection& dir : candidate_directions(hist, scene)) {
    if (dir.blockers.empty()) continue;  // free bin would have returned above
    const bool blocked_by_fixed =
        std::any_of(dir.blockers.begin(), dir.blockers.end(),
                    [&](const std::string& id) {
                      return id == target_id || visited.count(id) > 0;
                    });
    if (blocked_by_fixed) continue;

    Scene trial = scene;
    std::vector<std::string> trial_seq;
    bool ok = true;
    for (const auto& id : dir.blockers) {
      const SceneObject* blocker = trial.find_object(id);
      if (blocker == nullptr) continue;  // already cleared recursively
      if (!is_accessible(blocker->disc(), trial, {id}, params, telemetry)) {
        IdSet visited2 = visited;
        visited2.insert(id);
        if (!clear_subject(trial, blocker->disc(), {id}, visited2, depth + 1,
                           target_id, params, telemetry, trial_seq)) {
          ok = false;
          break;
        }
      }
      trial.remove_object(id);
      trial_seq.push_back(id);
    }
    if (!ok) continue;
    if (!is_accessible(subject, trial, subject_ignore, params, telemetry)) continue;
    scene = std::move(trial);
    seq.insert(seq.end(), trial_seq.begin(), trial_seq.end());
    return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::string>> relocate_plan(const Scene& scene,
                                                      const SubjectRef& subject,
                                                      const AccessParams& params,
                                                      Telemetry* telemetry) {
  Scene copy = scene;
  IdSet ignore;
  IdSet visited;
  if (!subject.ignore_id.empty()) {
    ignore.insert(subject.ignore_id);
    visited.insert(subject.ignore_id);
  }
  std::vector<std::string> seq;
  const std::string target_id = scene.target().id;
  if (clear_subject(copy, subject.disc, ignore, visited, 0, target_id, params,
                    telemetry, seq))
    return seq;
  return std::nullopt;
}

const Slot& choose_slot(Strategy strategy, const Scene& scene,
                        const std::vector<std::string>& valid_ids,
                        const BetaMap* beta) {
  if (valid_ids.empty())
    throw std::invalid_argument("choose_slot requires a nonempty valid set");
  const Vec2 target_center = scene.target().center;

  const Slot* best = nullptr;
  for (const auto& id : valid_ids) {
    const Slot* s = scene.find_slot(id);
    if (best == nullptr) {
      best = s;
      continue;
    }
    bool better = false;
    switch (strategy) {
      case Strategy::Proposed: {
        const int bs = beta->entries.at(s->id);
        const int bb = beta->entries.at(best->id);
        const double ds = distance(s->center, target_center);
        const double db = distance(best->center, target_center);
        better = bs < bb || (bs == bb && ds > db) ||
                 (bs == bb && ds == db && s->id < best->id);
        break;
      }
      case Strategy::Deepest:
        better = s->center.y > best->center.y ||
                 (s->center.y == best->center.y && s->id < best->id);
        break;
      case Strategy::Farthest: {
        const double ds = distance(s->center, target_center);
        const double db = distance(best->center, target_center);
        better = ds > db || (ds == db && s->id < best->id);
        break;
      }
    }
    if (better) best = s;
  }
  return *best;
}

PlanTrace plan_rearrangement(const Scene& input, Strategy strategy,
                             const PlanLimits& limits, const AccessParams& params,
                             int sampling_trials) {
  const auto t0 = std::chrono::steady_clock::now();
  PlanTrace trace;
  Scene scene = input;
  Telemetry* telem = &trace.counters;

  if (scene.slots.empty()) {
    std::mt19937_64 rng(scene.seed);
    scene.slots =
        sample_candidate_slots(scene, scene.slot_radius(), sampling_trials, rng);
  }

  const std::string target_id = scene.target().id;
  const auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };
  const auto finish = [&](bool success, FailReason reason) {
    trace.success = success;
    trace.reason = reason;
    IdSet moved;
    trace.monotone = true;
    for (const Action& a : trace.actions)
      if (!moved.insert(a.object_id).second) trace.monotone = false;
    trace.plan_time_ms = elapsed_ms();
    return trace;
  };
  const auto target_subject = [&] {
    return SubjectRef::for_object(*scene.find_object(target_id));
  };
  const auto move_to_slot = [&](const std::string& object_id,
                                const std::string& slot_id) {
    SceneObject* obj = scene.find_object(object_id);
    Slot* slot = scene.find_slot(slot_id);
    Action a;
    a.step = trace.k();
    a.object_id = object_id;
    a.from = obj->center;
    a.slot_id = slot_id;
    a.to = slot->center;
    const SceneObject former = *obj;
    obj->center = slot->center;
    slot->state = SlotState::Occupied;
    trace.actions.push_back(a);
    // An object leaving a slot it was placed into frees that slot again;
    // otherwise its original footprint becomes a fresh candidate if it fits.
    Slot* origin = nullptr;
    for (auto& s : scene.slots)
      if (s.state == SlotState::Occupied &&
          distance(s.center, former.center) < kGeomEps)
        origin = &s;
    if (origin != nullptr)
      origin->state = SlotState::Candidate;
    else
      mint_vacated_slot(scene, former);
  };

  auto relocation = relocate_plan(scene, target_subject(), params, telem);
  if (!relocation) return finish(false, FailReason::InfeasibleRelocation);
  if (static_cast<int>(relocation->size()) > scene.candidate_slot_count())
    return finish(false, FailReason::InsufficientSpace);

  while (!relocation->empty()) {
    if (elapsed_ms() > limits.budget_s * 1000.0)
      return finish(false, FailReason::Timeout);

    const auto valid =
        find_valid_candidates(scene, *relocation, target_subject(), params, telem);

    if (valid.size() < relocation->size()) {
      if (strategy != Strategy::Proposed)
        return finish(false, FailReason::NonMonotoneRequired);

      const auto occluded = occluded_slots(scene, params, telem);
      if (occluded.empty()) return finish(false, FailReason::NoOccludedSlots);

      // Cheapest occluded slot to open up (Infeasible counts as +inf).
      std::optional<std::vector<std::string>> acq_relocation;
      std::string acq_slot;
      for (const auto& id : occluded) {
        auto r = relocate_plan(scene, SubjectRef::for_slot(*scene.find_slot(id)),
                               params, telem);
        if (r && (!acq_relocation || r->size() < acq_relocation->size())) {
          acq_relocation = std::move(r);
          acq_slot = id;
        }
      }
      if (!acq_relocation || acq_relocation->empty())
        return finish(false, FailReason::InfeasibleRelocation);

      const auto acq_valid = find_valid_candidates(
          scene, *acq_relocation, SubjectRef::for_slot(*scene.find_slot(acq_slot)),
          params, telem);
      if (static_cast<int>(acq_relocation->size()) - 1 >
          static_cast<int>(acq_valid.size()))
        return finish(false, FailReason::InsufficientAcquisitionSlots);

      if (acq_relocation->size() == 1) {
        move_to_slot(acq_relocation->front(), acq_slot);
      } else {
        const BetaMap beta = compute_beta(scene, acq_valid, params, telem);
        const Slot& dest = choose_slot(Strategy::Proposed, scene, acq_valid, &beta);
        move_to_slot(acq_relocation->front(), dest.id);
      }
    } else {
      if (strategy == Strategy::Proposed) {
        const BetaMap beta = compute_beta(scene, valid, params, telem);
        const Slot& dest = choose_slot(strategy, scene, valid, &beta);
        move_to_slot(relocation->front(), dest.id);
      } else {
        // Baselines are distance-metric placers with no validity machinery:
        // they pick among merely reachable slots, and being monotone methods
        // they refuse to handle an object a second time.
        IdSet moved;
        for (const Action& a : trace.actions) moved.insert(a.object_id);
        if (moved.count(relocation->front()) > 0)
          return finish(false, FailReason::NonMonotoneRequired);
        std::vector<std::string> reachable;
        for (const auto& s : scene.slots)
          if (s.state != SlotState::Occupied &&
              is_accessible(s.disc(), scene, {}, params, telem))
            reachable.push_back(s.id);
        if (reachable.empty())
          return finish(false, FailReason::NonMonotoneRequired);
        const Slot& dest = choose_slot(strategy, scene, reachable, nullptr);
        move_to_slot(relocation->front(), dest.id);
      }
    }

    relocation = relocate_plan(scene, target_subject(), params, telem);
    if (!relocation) return finish(false, FailReason::InfeasibleRelocation);
  }
  return finish(true, FailReason::None);
}

bool validate_plan(const Scene& input, const PlanTrace& trace,
                   const AccessParams& params, int* first_bad_step) {
  const auto fail_at = [&](int i) {
    if (first_bad_step != nullptr) *first_bad_step = i;
    return false;
  };
  if (!trace.success) return fail_at(0);

  Scene scene = input;
  const std::string target_id = scene.target().id;

  for (int i = 0; i < trace.k(); ++i) {
    const Action& a = trace.actions[i];
    const SceneObject* obj = scene.find_object(a.object_id);
    if (obj == nullptr || obj->role == Role::Target) return fail_at(i);
    if (distance(obj->center, a.from) > 1e-6) return fail_at(i);
    if (!is_accessible(obj->disc(), scene, {obj->id}, params)) return fail_at(i);

    SceneObject moved = *obj;
    scene.remove_object(a.object_id);
    const Disc dest{a.to, moved.radius};
    if (!disc_in_workspace(dest, scene.workspace)) return fail_at(i);
    for (const auto& other : scene.objects)
      if (discs_overlap(dest, other.disc())) return fail_at(i);
    if (!is_accessible(dest, scene, {}, params)) return fail_at(i);
    moved.center = a.to;
    scene.objects.push_back(moved);
  }

  const SceneObject& target = *scene.find_object(target_id);
  if (!is_accessible(target.disc(), scene, {target_id}, params))
    return fail_at(trace.k());
  return true;
}

nlohmann::json PlanTrace::to_json() const {
  nlohmann::json j;
  j["outcome"] = success ? "success" : "fail";
  if (!success) j["reason"] = to_string(reason);
  j["k"] = k();
  j["monotone"] = monotone;
  j["actions"] = nlohmann::json::array();
  for (const auto& a : actions) {
    j["actions"].push_back({{"step", a.step},
                            {"object", a.object_id},
                            {"from", {a.from.x, a.from.y}},
                            {"slot", a.slot_id},
                            {"to", {a.to.x, a.to.y}}});
  }
  j["counters"] = {{"corridor_tests", counters.corridor_tests},
                   {"beta_evals", counters.beta_evals},
                   {"relocate_calls", counters.relocate_calls},
                   {"plan_time_ms", plan_time_ms}};
  return j;
}

PlanTrace PlanTrace::from_json(const nlohmann::json& j) {
  PlanTrace t;
  t.success = j.at("outcome").get<std::string>() == "success";
  if (j.contains("reason"))
    t.reason = fail_reason_from_string(j.at("reason").get<std::string>());
  t.monotone = j.value("monotone", true);
  for (const auto& ja : j.at("actions")) {
    Action a;
    a.step = ja.at("step").get<int>();
    a.object_id = ja.at("object").get<std::string>();
    a.from = {ja.at("from")[0].get<double>(), ja.at("from")[1].get<double>()};
    a.slot_id = ja.at("slot").get<std::string>();
    a.to = {ja.at("to")[0].get<double>(), ja.at("to")[1].get<double>()};
    t.actions.push_back(a);
  }
  if (j.contains("counters")) {
    const auto& c = j.at("counters");
    t.counters.corridor_tests = c.value("corridor_tests", 0LL);
    t.counters.beta_evals = c.value("beta_evals", 0LL);
    t.counters.relocate_calls = c.value("relocate_calls", 0LL);
    t.plan_time_ms = c.value("plan_time_ms", 0.0);
  }
  return t;
}

}  // namespace rearrange
