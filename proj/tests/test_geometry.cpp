#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rearrange/scene.hpp"

using namespace rearrange;
using namespace rearrange::testing;

TEST_CASE("discs_overlap: tangency is not overlap") {
  CHECK_FALSE(discs_overlap({{0, 0}, 1}, {{2, 0}, 1}));
  CHECK(discs_overlap({{0, 0}, 1}, {{1.9, 0}, 1}));
  // distance 5 > radius sum 4
  CHECK_FALSE(discs_overlap({{0, 0}, 2}, {{3, 4}, 2}));
}

TEST_CASE("discs_overlap is symmetric") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  std::uniform_real_distribution<double> ur(0.1, 5.0);
  for (int i = 0; i < 500; ++i) {
    const Disc a{{u(rng), u(rng)}, ur(rng)};
    const Disc b{{u(rng), u(rng)}, ur(rng)};
    CHECK(discs_overlap(a, b) == discs_overlap(b, a));
  }
}

TEST_CASE("disc_in_workspace") {
  const Workspace w{90, 45, 45};
  CHECK(disc_in_workspace({{45, 22.5}, 3.5}, w));
  CHECK_FALSE(disc_in_workspace({{2, 22.5}, 3.5}, w));
  // boundary contact is inside
  CHECK(disc_in_workspace({{3.5, 3.5}, 3.5}, w));
}

namespace {

Scene empty_scene() {
  Scene s;
  s.workspace = {90, 45, 45};
  return s;
}

}  // namespace

TEST_CASE("corridor_clear basic cases") {
  Scene s = empty_scene();
  CHECK(corridor_clear({{45, 30}, 0.0, 3.5}, s, {}));

  // Obstacle straight ahead at distance 5: gap 0 < radius sum.
  s.objects.push_back(obj("a", 45, 25));
  CHECK_FALSE(corridor_clear({{45, 30}, 0.0, 3.5}, s, {}));
  CHECK(corridor_clear({{45, 30}, 0.0, 3.5}, s, {"a"}));
}

TEST_CASE("corridor_clear respects side and back walls") {
  Scene s = empty_scene();
  // Exits through the left wall.
  CHECK_FALSE(corridor_clear({{10, 40}, -0.9, 3.5}, s, {}));
  // Straight out from near a wall is fine.
  CHECK(corridor_clear({{3.5, 40}, 0.0, 3.5}, s, {}));
}

TEST_CASE("corridor_clear counts tests in telemetry") {
  Scene s = empty_scene();
  Telemetry t;
  corridor_clear({{45, 30}, 0.0, 3.5}, s, {}, &t);
  corridor_clear({{45, 30}, 0.1, 3.5}, s, {}, &t);
  CHECK(t.corridor_tests == 2);
}

TEST_CASE("corridor_clear is monotone in the ignore set") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(3.5, 86.5), uy(3.5, 41.5);
  std::uniform_real_distribution<double> uth(-1.2, 1.2);
  for (int i = 0; i < 200; ++i) {
    Scene s = empty_scene();
    for (int k = 0; k < 6; ++k)
      s.objects.push_back(obj("o" + std::to_string(k), ux(rng), uy(rng)));
    const Corridor c{{ux(rng), uy(rng)}, uth(rng), 3.5};
    IdSet ignore;
    bool prev = corridor_clear(c, s, ignore);
    for (int k = 0; k < 6; ++k) {
      ignore.insert("o" + std::to_string(k));
      const bool now = corridor_clear(c, s, ignore);
      CHECK((!prev || now));  // enlarging ignore never flips true -> false
      prev = now;
    }
  }
}

TEST_CASE("corridor_clear agrees with the point-sampling oracle") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ux(4.0, 86.0), uy(5.0, 41.0);
  std::uniform_real_distribution<double> ur(1.0, 4.0);
  std::uniform_real_distribution<double> uth(-1.3, 1.3);
  std::uniform_int_distribution<int> un(0, 5);

  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    Scene s = empty_scene();
    const int n = un(rng);
    for (int k = 0; k < n; ++k) {
      const Disc d{{ux(rng), uy(rng)}, ur(rng)};
      if (disc_in_workspace(d, s.workspace))
        s.objects.push_back({"o" + std::to_string(k), d.center, d.radius,
                             Role::Obstacle});
    }
    const Corridor c{{ux(rng), uy(rng)}, uth(rng), ur(rng)};
    const bool fast = corridor_clear(c, s, {});
    const bool slow = corridor_clear_sampling_oracle(c, s, {});
    CHECK_MESSAGE(fast == slow, "case ", i);
    ++checked;
  }
  CHECK(checked == 1000);
}
