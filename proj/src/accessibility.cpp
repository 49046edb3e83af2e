#include "rearrange/accessibility.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rearrange {

bool DirectionHistogram::any_free() const {
  return std::any_of(bins.begin(), bins.end(),
                     [](const HistogramBin& b) { return b.free; });
}

nlohmann::json DirectionHistogram::to_json() const {
  nlohmann::json j;
  j["bins"] = nlohmann::json::array();
  for (const auto& b : bins) {
    j["bins"].push_back(
        {{"theta", b.theta}, {"free", b.free}, {"blockers", b.blockers}});
  }
  return j;
}

void open_span(const Disc& subject, const Workspace& w, double clearance,
               double& lo, double& hi) {
  const double rc = subject.radius + clearance;
  // Directions toward the open-edge segment inset by the corridor radius,
  // so in-span corridors cannot clip the side walls.
  lo = std::atan2(rc - subject.center.x, subject.center.y);
  hi = std::atan2(w.width - rc - subject.center.x, subject.center.y);
}

DirectionHistogram build_histogram(const Disc& subject, const Scene& scene,
                                   const IdSet& ignore, const AccessParams& params,
                                   Telemetry* telemetry) {
  if (params.bins < 2) throw std::invalid_argument("histogram needs >= 2 bins");

  DirectionHistogram hist;
  open_span(subject, scene.workspace, params.clearance, hist.theta_lo,
            hist.theta_hi);
  const double step = (hist.theta_hi - hist.theta_lo) / params.bins;
  const double rc = subject.radius + params.clearance;

  hist.bins.reserve(params.bins);
  for (int i = 0; i < params.bins; ++i) {
    HistogramBin bin;
    bin.theta = hist.theta_lo + (i + 0.5) * step;
    const Corridor c{subject.center, bin.theta, rc};
    bin.free = corridor_clear(c, scene, ignore, telemetry);
    for (const SceneObject& obj : scene.objects) {
      if (ignore.count(obj.id) > 0) continue;
      if (corridor_hits_disc(c, obj.disc())) bin.blockers.push_back(obj.id);
    }
    std::stable_sort(bin.blockers.begin(), bin.blockers.end(),
                     [&](const std::string& a, const std::string& b) {
                       return scene.find_object(a)->center.y <
                              scene.find_object(b)->center.y;
                     });
    hist.bins.push_back(std::move(bin));
  }
  return hist;
}

bool is_accessible(const Disc& subject, const Scene& scene, const IdSet& ignore,
                   const AccessParams& params, Telemetry* telemetry) {
  double lo = 0.0, hi = 0.0;
  open_span(subject, scene.workspace, params.clearance, lo, hi);
  const double step = (hi - lo) / params.bins;
  const double rc = subject.radius + params.clearance;
  for (int i = 0; i < params.bins; ++i) {
    const Corridor c{subject.center, lo + (i + 0.5) * step, rc};
    if (corridor_clear(c, scene, ignore, telemetry)) return true;
  }
  return false;
}

BlockerDirection min_blocker_direction(const Disc& subject, const Scene& scene,
                                       const IdSet& ignore,
                                       const AccessParams& params,
                                       Telemetry* telemetry) {
  const DirectionHistogram hist =
      build_histogram(subject, scene, ignore, params, telemetry);

  BlockerDirection best;
  std::size_t best_count = std::numeric_limits<std::size_t>::max();
  double best_edge_sum = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hist.bins.size(); ++i) {
    const HistogramBin& bin = hist.bins[i];
    double edge_sum = 0.0;
    for (const auto& id : bin.blockers) edge_sum += scene.find_object(id)->center.y;
    if (bin.blockers.size() < best_count ||
        (bin.blockers.size() == best_count && edge_sum < best_edge_sum)) {
      best_count = bin.blockers.size();
      best_edge_sum = edge_sum;
      best.theta = bin.theta;
      best.bin_index = i;
      best.blockers = bin.blockers;
    }
  }
  return best;
}

}  // namespace rearrange
