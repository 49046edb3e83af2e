#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "rearrange/harness.hpp"

using namespace rearrange;
using namespace rearrange::testing;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("rearrange_test_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("generate_instance places N+1 non-overlapping discs") {
  InstanceParams p;
  p.n_obstacles = 15;
  p.seed = 5;
  const auto scene = generate_instance(p);
  REQUIRE(scene.has_value());
  CHECK(scene->objects.size() == 16);
  CHECK(scene->target().id == "ot");
  check_scene(*scene);
  for (const auto& o : scene->objects)
    CHECK(disc_in_workspace(o.disc(), scene->workspace));
}

TEST_CASE("generate_instance is deterministic in the seed") {
  InstanceParams p;
  p.n_obstacles = 12;
  p.seed = 77;
  const auto a = generate_instance(p);
  const auto b = generate_instance(p);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->to_json() == b->to_json());
  p.seed = 78;
  const auto c = generate_instance(p);
  REQUIRE(c.has_value());
  CHECK(a->to_json() != c->to_json());
}

TEST_CASE("generate_instance refuses over-dense requests") {
  InstanceParams p;
  p.n_obstacles = 200;
  p.seed = 1;
  CHECK_FALSE(generate_instance(p).has_value());
}

TEST_CASE("require_blocked yields an initially inaccessible target") {
  InstanceParams p;
  p.n_obstacles = 15;
  p.require_blocked = true;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    p.seed = seed;
    const auto scene = generate_instance(p);
    REQUIRE(scene.has_value());
    CHECK_FALSE(is_accessible(scene->target().disc(), *scene,
                              {scene->target().id}, {}));
  }
}

TEST_CASE("large-space preset widens the workspace") {
  InstanceParams p;
  p.apply_large_space();
  CHECK(p.workspace.width == 120.0);
  CHECK(p.workspace.depth == 75.0);
}

TEST_CASE("run_bench produces one row per (N, seed, strategy)") {
  BenchConfig cfg;
  cfg.n_sweep = {5, 7};
  cfg.instances_per_n = 2;
  cfg.seed0 = 1;
  const auto rows = run_bench(cfg);
  REQUIRE(rows.size() == 2 * 2 * 3);
  int proposed = 0;
  for (const auto& r : rows) {
    CHECK((r.n == 5 || r.n == 7));
    CHECK((r.seed == 1 || r.seed == 2));
    if (r.strategy == Strategy::Proposed) ++proposed;
  }
  CHECK(proposed == 4);
}

TEST_CASE("CSV schema and escaping") {
  BenchConfig cfg;
  cfg.n_sweep = {5};
  cfg.instances_per_n = 1;
  const auto rows = run_bench(cfg);
  const std::string csv = metrics_to_csv(rows);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == kCsvHeader);
  int lines = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++lines;
    int commas = 0;
    for (char c : line) commas += c == ',';
    CHECK(commas == 7);
  }
  CHECK(lines == static_cast<int>(rows.size()));
}

TEST_CASE("summary aggregates per (N, strategy) cell") {
  BenchConfig cfg;
  cfg.n_sweep = {5};
  cfg.instances_per_n = 3;
  const auto rows = run_bench(cfg);
  const auto summary = summarize_metrics(rows);
  REQUIRE(summary.is_array());
  CHECK(summary.size() == 3);  // one per strategy
  for (const auto& cell : summary) {
    CHECK(cell["instances"] == 3);
    CHECK(cell["success_rate"].get<double>() >= 0.0);
    CHECK(cell["success_rate"].get<double>() <= 1.0);
  }
}

TEST_CASE("write_bench_outputs emits metrics.csv and summary.json") {
  BenchConfig cfg;
  cfg.n_sweep = {4};
  cfg.instances_per_n = 1;
  cfg.out_dir = temp_dir("bench").string();
  const auto rows = run_bench(cfg);
  write_bench_outputs(cfg, rows);
  CHECK(fs::exists(fs::path(cfg.out_dir) / "metrics.csv"));
  CHECK(fs::exists(fs::path(cfg.out_dir) / "summary.json"));
}

TEST_CASE("render_svg writes a well-formed drawing") {
  const fs::path dir = temp_dir("svg");
  const fs::path file = dir / "scene.svg";
  render_svg(make_monotone_scene(), file);
  REQUIRE(fs::exists(file));
  std::ifstream in(file);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string svg = buf.str();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  // 7 objects + 2 slots at minimum.
  std::size_t circles = 0, pos = 0;
  while ((pos = svg.find("<circle", pos)) != std::string::npos) {
    ++circles;
    pos += 7;
  }
  CHECK(circles >= 9);
}

TEST_CASE("render_trace_svg writes k+1 frames") {
  const Scene s = make_monotone_scene();
  const PlanTrace t = plan_rearrangement(s, Strategy::Proposed);
  REQUIRE(t.success);
  const fs::path dir = temp_dir("frames");
  const int n = render_trace_svg(s, t, dir, "step");
  CHECK(n == t.k() + 1);
  for (int i = 0; i <= t.k(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "step_%03d.svg", i);
    CHECK(fs::exists(dir / name));
  }
}
