#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rearrange/slots.hpp"

namespace rearrange {

enum class Strategy { Proposed, Deepest, Farthest };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

enum class FailReason {
  None,
  InsufficientSpace,           // |O_R| > |S_c| at start
  NoOccludedSlots,             // acquisition needed but S_e empty
  InsufficientAcquisitionSlots,// |O'_R| - 1 > |S'_v|
  InfeasibleRelocation,        // no sequentially clearable blocker set
  Timeout,
  NonMonotoneRequired          // baselines hit |S_v| < |O_R|
};

std::string to_string(FailReason r);

struct Action {
  int step = 0;
  std::string object_id;
  Vec2 from;
  std::string slot_id;
  Vec2 to;
};

struct PlanTrace {
  bool success = false;
  FailReason reason = FailReason::None;
  std::vector<Action> actions;
  bool monotone = true;  // no object was moved more than once
  Telemetry counters;
  double plan_time_ms = 0.0;

  int k() const { return static_cast<int>(actions.size()); }
  nlohmann::json to_json() const;
  static PlanTrace from_json(const nlohmann::json& j);
};

struct PlanLimits {
  double budget_s = 300.0;
};

// Ordered object ids whose sequential removal makes `subject` accessible
// (first element accessible in the current scene). nullopt when no direction
// yields a sequentially clearable blocker set. The target is never relocated.
std::optional<std::vector<std::string>> relocate_plan(const Scene& scene,
                                                      const SubjectRef& subject,
                                                      const AccessParams& params,
                                                      Telemetry* telemetry = nullptr);

// Placement rule. Proposed: argmin beta, ties by larger distance from the
// target, then slot id. Deepest: farthest from the open edge. Farthest:
// farthest from the target. Baseline ties break lexicographically.
const Slot& choose_slot(Strategy strategy, const Scene& scene,
                        const std::vector<std::string>& valid_ids,
                        const BetaMap* beta);

PlanTrace plan_rearrangement(const Scene& scene, Strategy strategy,
                             const PlanLimits& limits = {},
                             const AccessParams& params = {},
                             int sampling_trials = 1000);

// Ground-truth replay: every pick accessible, every placement accessible and
// collision-free, target accessible at the end. Destination discs are checked
// by coordinates, so minted slots need not exist in the initial scene.
bool validate_plan(const Scene& scene, const PlanTrace& trace,
                   const AccessParams& params = {},
                   int* first_bad_step = nullptr);

}  // namespace rearrange
