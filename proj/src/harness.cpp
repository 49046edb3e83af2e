#include "rearrange/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

namespace rearrange {

namespace {

constexpr int kMaxPlacementAttempts = 10000;
constexpr int kMaxBlockedRetries = 200;

std::optional<Scene> place_objects(const InstanceParams& params,
                                   std::mt19937_64& rng) {
  Scene scene;
  scene.workspace = params.workspace;
  scene.seed = params.seed;
  std::uniform_real_distribution<double> ux(params.radius,
                                            params.workspace.width - params.radius);
  std::uniform_real_distribution<double> uy(params.radius,
                                            params.workspace.depth - params.radius);

  int attempts = 0;
  for (int i = 0; i <= params.n_obstacles; ++i) {
    const bool is_target = (i == 0);
    while (true) {
      if (++attempts > kMaxPlacementAttempts) return std::nullopt;
      const Disc d{{ux(rng), uy(rng)}, params.radius};
      bool free = true;
      for (const auto& o : scene.objects)
        if (discs_overlap(d, o.disc())) {
          free = false;
          break;
        }
      if (!free) continue;
      SceneObject obj;
      obj.id = is_target ? "ot" : "o" + std::to_string(i - 1);
      obj.center = d.center;
      obj.radius = params.radius;
      obj.role = is_target ? Role::Target : Role::Obstacle;
      scene.objects.push_back(obj);
      break;
    }
  }
  return scene;
}

}  // namespace

std::optional<Scene> generate_instance(const InstanceParams& params) {
  if (params.n_obstacles < 1) return std::nullopt;
  const double disc_area =
      (params.n_obstacles + 1) * std::numbers::pi * params.radius * params.radius;
  if (disc_area >= 0.7 * params.workspace.width * params.workspace.depth)
    return std::nullopt;

  std::mt19937_64 rng(params.seed);
  for (int retry = 0; retry < (params.require_blocked ? kMaxBlockedRetries : 1);
       ++retry) {
    auto scene = place_objects(params, rng);
    if (!scene) return std::nullopt;
    if (params.require_blocked) {
      const SceneObject& t = scene->target();
      if (is_accessible(t.disc(), *scene, {t.id}, AccessParams{})) continue;
    }
    return scene;
  }
  return std::nullopt;
}

BenchConfig BenchConfig::from_json(const nlohmann::json& j) {
  BenchConfig c;
  c.n_sweep = j.at("n_sweep").get<std::vector<int>>();
  c.instances_per_n = j.value("instances_per_n", 20);
  if (j.contains("strategies")) {
    c.strategies.clear();
    for (const auto& s : j.at("strategies"))
      c.strategies.push_back(strategy_from_string(s.get<std::string>()));
  }
  c.budget_s = j.value("budget_s", 300.0);
  c.out_dir = j.value("out_dir", std::string{});
  c.seed0 = j.value("seed0", std::uint64_t{1});
  if (j.value("large_space", false)) c.base.apply_large_space();
  if (j.contains("workspace")) {
    const auto& w = j.at("workspace");
    c.base.workspace.width = w.at("w").get<double>();
    c.base.workspace.depth = w.at("d").get<double>();
    c.base.workspace.height = w.value("h", 45.0);
  }
  c.base.radius = j.value("radius", 3.5);
  c.base.sampling_trials = j.value("trials", 1000);
  c.base.require_blocked = j.value("require_blocked", false);
  return c;
}

std::vector<MetricsRow> run_bench(const BenchConfig& config) {
  std::vector<MetricsRow> rows;
  for (int n : config.n_sweep) {
    for (int i = 0; i < config.instances_per_n; ++i) {
      InstanceParams params = config.base;
      params.n_obstacles = n;
      params.seed = config.seed0 + static_cast<std::uint64_t>(i);
      auto scene = generate_instance(params);
      if (!scene) continue;  // over-dense cell; recorded as absent rows

      // One candidate slot set per cell, shared by every strategy.
      std::mt19937_64 rng(params.seed ^ 0x9e3779b97f4a7c15ULL);
      scene->slots = sample_candidate_slots(*scene, scene->slot_radius(),
                                            params.sampling_trials, rng);

      for (Strategy strategy : config.strategies) {
        const PlanTrace trace =
            plan_rearrangement(*scene, strategy, {config.budget_s});
        MetricsRow row;
        row.n = n;
        row.strategy = strategy;
        row.seed = params.seed;
        row.success = trace.success;
        row.reason = trace.reason;
        row.k = trace.k();
        row.plan_time_ms = trace.plan_time_ms;
        row.corridor_tests = trace.counters.corridor_tests;
        row.monotone = trace.monotone;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string metrics_to_csv(const std::vector<MetricsRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const auto& r : rows) {
    os << r.n << "," << to_string(r.strategy) << "," << r.seed << ","
       << (r.success ? "success" : to_string(r.reason)) << "," << r.k << ","
       << r.plan_time_ms << "," << r.corridor_tests << ","
       << (r.monotone ? "true" : "false") << "\n";
  }
  return os.str();
}

namespace {

struct Stats {
  int n = 0;
  double mean = 0.0;
  double stddev = 0.0;
};

Stats stats_of(const std::vector<double>& xs) {
  Stats s;
  s.n = static_cast<int>(xs.size());
  if (xs.empty()) return s;
  for (double x : xs) s.mean += x;
  s.mean /= s.n;
  for (double x : xs) s.stddev += (x - s.mean) * (x - s.mean);
  s.stddev = s.n > 1 ? std::sqrt(s.stddev / (s.n - 1)) : 0.0;
  return s;
}

}  // namespace

nlohmann::json summarize_metrics(const std::vector<MetricsRow>& rows) {
  nlohmann::json summary = nlohmann::json::array();
  std::vector<std::pair<int, Strategy>> cells;
  for (const auto& r : rows) {
    const auto cell = std::make_pair(r.n, r.strategy);
    if (std::find(cells.begin(), cells.end(), cell) == cells.end())
      cells.push_back(cell);
  }
  for (const auto& [n, strategy] : cells) {
    int total = 0, successes = 0, monotone = 0;
    std::vector<double> ks, times;
    for (const auto& r : rows) {
      if (r.n != n || r.strategy != strategy) continue;
      ++total;
      if (r.success) {
        ++successes;
        if (r.monotone) ++monotone;
        ks.push_back(r.k);
        times.push_back(r.plan_time_ms);
      }
    }
    const Stats ks_stats = stats_of(ks);
    const Stats ts_stats = stats_of(times);
    summary.push_back({{"N", n},
                       {"strategy", to_string(strategy)},
                       {"instances", total},
                       {"successes", successes},
                       {"success_rate", total > 0 ? double(successes) / total : 0.0},
                       {"monotone_successes", monotone},
                       {"k_mean", ks_stats.mean},
                       {"k_std", ks_stats.stddev},
                       {"plan_time_ms_mean", ts_stats.mean},
                       {"plan_time_ms_std", ts_stats.stddev}});
  }
  return summary;
}

void write_bench_outputs(const BenchConfig& config,
                         const std::vector<MetricsRow>& rows) {
  const std::filesystem::path dir =
      config.out_dir.empty() ? std::filesystem::current_path()
                             : std::filesystem::path(config.out_dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream csv(dir / "metrics.csv");
    if (!csv) throw std::runtime_error("cannot write " + (dir / "metrics.csv").string());
    csv << metrics_to_csv(rows);
  }
  {
    std::ofstream js(dir / "summary.json");
    if (!js) throw std::runtime_error("cannot write " + (dir / "summary.json").string());
    js << summarize_metrics(rows).dump(2) << "\n";
  }
}

namespace {

constexpr double kSvgScale = 8.0;  // px per cm
constexpr double kSvgMargin = 10.0;

double sx(double x) { return kSvgMargin + x * kSvgScale; }
// Flip y so the open edge sits at the bottom of the image.
double sy(double y, const Workspace& w) { return kSvgMargin + (w.depth - y) * kSvgScale; }

void svg_circle(std::ostream& os, double cx, double cy, double r,
                const std::string& stroke, const std::string& fill, bool dashed,
                double width = 2.0) {
  os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r
     << "\" stroke=\"" << stroke << "\" fill=\"" << fill << "\" stroke-width=\""
     << width << "\"";
  if (dashed) os << " stroke-dasharray=\"6,4\"";
  os << "/>\n";
}

}  // namespace

void render_svg(const Scene& scene, const std::filesystem::path& path,
                const Action* action) {
  const Workspace& w = scene.workspace;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write SVG to " + path.string());

  const double width = 2 * kSvgMargin + w.width * kSvgScale;
  const double height = 2 * kSvgMargin + w.depth * kSvgScale;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  os << "  <rect x=\"" << kSvgMargin << "\" y=\"" << kSvgMargin << "\" width=\""
     << w.width * kSvgScale << "\" height=\"" << w.depth * kSvgScale
     << "\" fill=\"white\" stroke=\"black\" stroke-width=\"3\"/>\n";
  // Open edge marked dashed along the bottom.
  os << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0, w) << "\" x2=\""
     << sx(w.width) << "\" y2=\"" << sy(0, w)
     << "\" stroke=\"white\" stroke-width=\"4\"/>\n";
  os << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0, w) << "\" x2=\""
     << sx(w.width) << "\" y2=\"" << sy(0, w)
     << "\" stroke=\"gray\" stroke-dasharray=\"10,6\" stroke-width=\"2\"/>\n";

  for (const auto& s : scene.slots) {
    std::string stroke = "magenta";
    bool dashed = true;
    if (s.state == SlotState::Valid) stroke = "blue";
    if (s.state == SlotState::Candidate) stroke = "gray";
    if (s.state == SlotState::Occupied) {
      stroke = "black";
      dashed = false;
    }
    svg_circle(os, sx(s.center.x), sy(s.center.y, w), s.radius * kSvgScale, stroke,
               "none", dashed);
    os << "  <text x=\"" << sx(s.center.x) << "\" y=\"" << sy(s.center.y, w)
       << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"" << stroke << "\">"
       << s.id << "</text>\n";
  }
  for (const auto& o : scene.objects) {
    const std::string color = o.role == Role::Target ? "green" : "red";
    svg_circle(os, sx(o.center.x), sy(o.center.y, w), o.radius * kSvgScale, color,
               color == "green" ? "#b9e8b9" : "#f3b9b9", false);
    os << "  <text x=\"" << sx(o.center.x) << "\" y=\"" << sy(o.center.y, w)
       << "\" font-size=\"12\" text-anchor=\"middle\">" << o.id << "</text>\n";
  }
  if (action != nullptr) {
    os << "  <line x1=\"" << sx(action->from.x) << "\" y1=\"" << sy(action->from.y, w)
       << "\" x2=\"" << sx(action->to.x) << "\" y2=\"" << sy(action->to.y, w)
       << "\" stroke=\"black\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
    os << "  <defs><marker id=\"arrow\" markerWidth=\"10\" markerHeight=\"8\" "
          "refX=\"8\" refY=\"4\" orient=\"auto\"><path d=\"M0,0 L10,4 L0,8 z\"/>"
          "</marker></defs>\n";
  }
  os << "</svg>\n";
  if (!os) throw std::runtime_error("failed writing SVG to " + path.string());
}

int render_trace_svg(const Scene& scene, const PlanTrace& trace,
                     const std::filesystem::path& dir, const std::string& prefix) {
  std::filesystem::create_directories(dir);
  Scene current = scene;
  int written = 0;
  const auto name = [&](int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "_%03d.svg", i);
    return dir / (prefix + buf);
  };
  for (int i = 0; i <= trace.k(); ++i) {
    const Action* next = i < trace.k() ? &trace.actions[i] : nullptr;
    render_svg(current, name(i), next);
    ++written;
    if (next != nullptr) {
      SceneObject* obj = current.find_object(next->object_id);
      if (obj != nullptr) {
        const SceneObject former = *obj;
        obj->center = next->to;
        if (Slot* s = current.find_slot(next->slot_id))
          s->state = SlotState::Occupied;
        mint_vacated_slot(current, former);
      }
    }
  }
  return written;
}

}  // namespace rearrange
