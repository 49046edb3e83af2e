#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rearrange/scene.hpp"

namespace rearrange {

// Resolution and end-effector clearance for directional reachability checks.
struct AccessParams {
  int bins = 180;        // angular bins over the open span
  double clearance = 0;  // extra corridor radius (cm)
};

struct HistogramBin {
  double theta = 0.0;  // bin center angle, from the open-edge outward normal
  bool free = false;
  std::vector<std::string> blockers;  // nearest to the open edge first
};

// Polar occupancy over the subject's open span: the directions whose approach
// corridor stays between the side walls and exits through the open edge.
struct DirectionHistogram {
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  std::vector<HistogramBin> bins;

  bool any_free() const;
  nlohmann::json to_json() const;
};

// Angular span [lo, hi] of wall-free corridor directions for a disc subject.
void open_span(const Disc& subject, const Workspace& w, double clearance,
               double& lo, double& hi);

DirectionHistogram build_histogram(const Disc& subject, const Scene& scene,
                                   const IdSet& ignore, const AccessParams& params,
                                   Telemetry* telemetry = nullptr);

// True iff at least one approach direction is collision-free. Early-exits,
// so it may run fewer corridor tests than a full histogram build.
bool is_accessible(const Disc& subject, const Scene& scene, const IdSet& ignore,
                   const AccessParams& params, Telemetry* telemetry = nullptr);

struct BlockerDirection {
  double theta = 0.0;
  std::size_t bin_index = 0;
  std::vector<std::string> blockers;  // empty when a free bin exists
};

// The bin with the fewest blockers; ties broken by smaller sum of blocker
// distances to the open edge, then by smaller bin index.
BlockerDirection min_blocker_direction(const Disc& subject, const Scene& scene,
                                       const IdSet& ignore,
                                       const AccessParams& params,
                                       Telemetry* telemetry = nullptr);

}  // namespace rearrange
