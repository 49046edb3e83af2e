#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rearrange/harness.hpp"

namespace {

using namespace rearrange;

constexpr int kExitSuccess = 0;
constexpr int kExitPlanFail = 1;
constexpr int kExitBadInput = 2;

std::string default_out_dir() {
  if (const char* env = std::getenv("REARRANGE_OUT_DIR")) return env;
  return ".";
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  is >> j;
  return j;
}

void save_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << j.dump(2) << "\n";
}

int cmd_gen(const InstanceParams& params, bool with_slots, const std::string& out) {
  auto scene = generate_instance(params);
  if (!scene) {
    std::cerr << "gen: could not place " << params.n_obstacles + 1
              << " discs (over-dense request or blocked-instance retries exhausted)\n";
    return kExitBadInput;
  }
  if (with_slots) {
    std::mt19937_64 rng(params.seed ^ 0x9e3779b97f4a7c15ULL);
    scene->slots = sample_candidate_slots(*scene, scene->slot_radius(),
                                          params.sampling_trials, rng);
  }
  save_json(scene->to_json(), out);
  return kExitSuccess;
}

int cmd_plan(const std::string& scene_path, const std::string& strategy_name,
             double budget_s, int trials, int bins, double clearance,
             const std::string& out) {
  Scene scene = Scene::from_json(load_json(scene_path));
  check_scene(scene);
  const Strategy strategy = strategy_from_string(strategy_name);
  AccessParams params;
  params.bins = bins;
  params.clearance = clearance;
  const PlanTrace trace =
      plan_rearrangement(scene, strategy, {budget_s}, params, trials);
  save_json(trace.to_json(), out);
  if (trace.success) {
    std::cout << "success k=" << trace.k() << "\n";
    return kExitSuccess;
  }
  std::cout << "fail reason=" << to_string(trace.reason) << "\n";
  return kExitPlanFail;
}

int cmd_bench(const std::string& config_path) {
  BenchConfig config = BenchConfig::from_json(load_json(config_path));
  if (config.out_dir.empty()) config.out_dir = default_out_dir();
  const auto rows = run_bench(config);
  write_bench_outputs(config, rows);
  std::cout << "wrote " << rows.size() << " rows to " << config.out_dir << "\n";
  return kExitSuccess;
}

int cmd_render(const std::string& scene_path, const std::string& trace_path,
               const std::string& out) {
  Scene scene = Scene::from_json(load_json(scene_path));
  if (trace_path.empty()) {
    render_svg(scene, out);
    std::cout << "wrote " << out << "\n";
    return kExitSuccess;
  }
  const PlanTrace trace = PlanTrace::from_json(load_json(trace_path));
  const std::filesystem::path p(out);
  const int n = render_trace_svg(scene, trace,
                                 p.parent_path().empty() ? "." : p.parent_path(),
                                 p.filename().string());
  std::cout << "wrote " << n << " SVG files\n";
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar rearrangement planning for cluttered one-side-open workspaces"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance (scene JSON)");
  InstanceParams gp;
  bool large_space = false;
  bool no_slots = false;
  std::string gen_out = "scene.json";
  gen->add_option("-N,--obstacles", gp.n_obstacles, "Number of obstacles");
  gen->add_option("--seed", gp.seed, "RNG seed");
  gen->add_option("--radius", gp.radius, "Object radius (cm)");
  gen->add_option("--width", gp.workspace.width, "Workspace width (cm)");
  gen->add_option("--depth", gp.workspace.depth, "Workspace depth (cm)");
  gen->add_option("--height", gp.workspace.height, "Workspace height (cm, metadata)");
  gen->add_option("--trials", gp.sampling_trials, "Slot sampling trials");
  gen->add_flag("--large-space", large_space, "120x75 cm workspace preset");
  gen->add_flag("--require-blocked", gp.require_blocked,
                "Reject instances whose target starts accessible");
  gen->add_flag("--no-slots", no_slots, "Skip candidate slot sampling");
  gen->add_option("-o,--out", gen_out, "Output scene JSON path");

  // plan
  auto* plan = app.add_subcommand("plan", "Plan rearrangement for a scene JSON");
  std::string plan_scene, plan_out = "trace.json", strategy = "proposed";
  double budget_s = 300.0, clearance = 0.0;
  int trials = 1000, bins = 180;
  plan->add_option("scene", plan_scene, "Scene JSON path")->required();
  plan->add_option("--strategy", strategy, "proposed | deepest | farthest");
  plan->add_option("--budget-s", budget_s, "Planning time budget (s)");
  plan->add_option("--trials", trials, "Slot sampling trials if scene has no slots");
  plan->add_option("--bins", bins, "Histogram bin count");
  plan->add_option("--clearance", clearance, "Corridor clearance (cm)");
  plan->add_option("-o,--out", plan_out, "Output trace JSON path");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark sweep from a config");
  std::string bench_config;
  bench->add_option("config", bench_config, "BenchConfig JSON path")->required();

  // render
  auto* render = app.add_subcommand("render", "Render a scene (and trace) to SVG");
  std::string render_scene, render_trace, render_out = "scene.svg";
  render->add_option("scene", render_scene, "Scene JSON path")->required();
  render->add_option("--trace", render_trace, "Trace JSON path (one SVG per step)");
  render->add_option("-o,--out", render_out, "Output SVG path (or prefix with --trace)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      if (large_space) gp.apply_large_space();
      return cmd_gen(gp, !no_slots, gen_out);
    }
    if (plan->parsed())
      return cmd_plan(plan_scene, strategy, budget_s, trials, bins, clearance,
                      plan_out);
    if (bench->parsed()) return cmd_bench(bench_config);
    if (render->parsed()) return cmd_render(render_scene, render_trace, render_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
