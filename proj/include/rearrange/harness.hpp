#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rearrange/planner.hpp"

namespace rearrange {

struct InstanceParams {
  Workspace workspace{90.0, 45.0, 45.0};
  int n_obstacles = 15;
  double radius = 3.5;
  std::uint64_t seed = 0;
  int sampling_trials = 1000;
  bool require_blocked = false;  // reject instances whose target starts accessible

  void apply_large_space() {
    workspace.width = 120.0;
    workspace.depth = 75.0;
  }
};

// Uniform random non-overlapping placement of the target and N obstacles.
// nullopt when the area precondition fails or 10,000 attempts elapse.
std::optional<Scene> generate_instance(const InstanceParams& params);

struct BenchConfig {
  std::vector<int> n_sweep;
  int instances_per_n = 20;
  std::vector<Strategy> strategies{Strategy::Proposed, Strategy::Deepest,
                                   Strategy::Farthest};
  double budget_s = 300.0;
  std::string out_dir;
  InstanceParams base;       // seed field unused; per-instance seeds derive from seed0
  std::uint64_t seed0 = 1;

  static BenchConfig from_json(const nlohmann::json& j);
};

struct MetricsRow {
  int n = 0;
  Strategy strategy = Strategy::Proposed;
  std::uint64_t seed = 0;
  bool success = false;
  FailReason reason = FailReason::None;
  int k = 0;
  double plan_time_ms = 0.0;
  long long corridor_tests = 0;
  bool monotone = true;
};

inline constexpr const char* kCsvHeader =
    "N,strategy,seed,outcome,k,plan_time_ms,corridor_tests,monotone";

// Runs every configured strategy on bit-identical scenes per (N, seed) cell.
std::vector<MetricsRow> run_bench(const BenchConfig& config);

std::string metrics_to_csv(const std::vector<MetricsRow>& rows);
nlohmann::json summarize_metrics(const std::vector<MetricsRow>& rows);

// Writes metrics.csv and summary.json into config.out_dir.
void write_bench_outputs(const BenchConfig& config,
                         const std::vector<MetricsRow>& rows);

// One SVG of the scene. Obstacles red, target green, slots dashed by state
// (valid blue, invalid magenta, occupied solid), optional action arrow.
void render_svg(const Scene& scene, const std::filesystem::path& path,
                const Action* action = nullptr);

// One SVG per plan step (initial + k), named <prefix>_NNN.svg. Returns the
// number of files written.
int render_trace_svg(const Scene& scene, const PlanTrace& trace,
                     const std::filesystem::path& dir, const std::string& prefix);

}  // namespace rearrange
