#include <random>

#include "doctest.h"
#include "drqsim/engine.hpp"
#include "drqsim/oracle.hpp"

using namespace drqsim;

TEST_CASE("tick oracle reproduces the illustration schedules") {
  auto w = bundled_dataset("table1");
  auto srr = tick_simulate(w, PolicyConfig::srr(3));
  CHECK(srr.segments.size() == 12);
  CHECK(srr == simulate(w, PolicyConfig::srr(3)).schedule);
  auto drq = tick_simulate(w, PolicyConfig::drq());
  CHECK(drq.segments.size() == 8);
  CHECK(drq == simulate(w, PolicyConfig::drq()).schedule);
}

TEST_CASE("tick oracle: single process") {
  Workload w({{"A", 0, 9}});
  auto s = tick_simulate(w, PolicyConfig::drq());
  REQUIRE(s.segments.size() == 1);
  CHECK(s.segments[0] == GanttSegment{"A", 0, 9});
  CHECK(s.completion.at("A") == 9);
}

TEST_CASE("tick oracle keeps back-to-back dispatches of one process apart") {
  auto s = tick_simulate(Workload({{"A", 2, 5}}), PolicyConfig::srr(2));
  CHECK(s.segments ==
        std::vector<GanttSegment>{{"A", 2, 4}, {"A", 4, 6}, {"A", 6, 7}});
}

// Wider configuration space than the acceptance run: measured trq and
// several threshold fractions.
TEST_CASE("engine and tick oracle agree across configurations") {
  std::vector<PolicyConfig> configs{PolicyConfig::fcfs()};
  for (Time q = 1; q <= 10; ++q) configs.push_back(PolicyConfig::srr(q));
  for (auto mode : {DrqMode::offline, DrqMode::online})
    for (auto trq : {TrqMode::formula, TrqMode::measured})
      for (auto f : {Rational(0), Rational(4, 100), Rational(1, 10), Rational(1, 2), Rational(9, 10)})
        configs.push_back(PolicyConfig::drq(mode, trq, f));

  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 300; ++iter) {
    GeneratorParams p{1 + rng() % 20, rng(), static_cast<Time>(rng() % 120), 1 + static_cast<Time>(rng() % 50)};
    auto w = generate_workload(p);
    for (const auto& cfg : configs) {
      auto engine = simulate(w, cfg).schedule;
      auto oracle = tick_simulate(w, cfg);
      if (engine != oracle) {
        INFO("seed ", p.seed, " policy ", cfg.label());
        REQUIRE(engine == oracle);
      }
    }
  }
}
