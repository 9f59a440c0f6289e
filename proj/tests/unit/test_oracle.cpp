#include <doctest.h>

#include <random>

#include "random_cases.h"
#include "vrpmtw/oracle.h"

using namespace vrpmtw;
using vrpmtw::testing::hand_instance;

namespace {

Instance single_visit(TimeWindow w, double travel, double service) {
  return hand_instance({{0, travel}, {travel, 0}}, {0, service}, {{{0, 100}}, {w}});
}

}  // namespace

TEST_CASE("unconstrained route costs its driving and service") {
  const auto inst = hand_instance({{0, 3, 4}, {5, 0, 6}, {7, 8, 0}}, {0, 2, 1},
                                  {{{0, 1000}}, {{0, 1000}}, {{0, 1000}}});
  const std::vector<int> route{1, 2};
  const auto best = oracle::min_duration(inst, route);
  REQUIRE(best.feasible);
  CHECK(best.duration == doctest::Approx(3 + 2 + 6 + 1 + 7));
}

TEST_CASE("single narrow window is reached without waiting") {
  const auto inst = single_visit({10, 12}, 2, 1);
  const std::vector<int> route{1};
  const auto best = oracle::min_duration(inst, route);
  REQUIRE(best.feasible);
  CHECK(best.duration == 5);
  CHECK(best.route_start == 8);
  CHECK(best.service_starts == std::vector<Time>{10});
  CHECK(oracle::min_duration_by_departure_sweep(inst, route) == 5);
}

TEST_CASE("empty route has zero duration") {
  const auto inst = single_visit({10, 12}, 2, 1);
  const auto best = oracle::min_duration(inst, std::vector<int>{});
  CHECK(best.feasible);
  CHECK(best.duration == 0);
}

TEST_CASE("duration is minimised by the latest feasible departure") {
  // Window [10,12] then [20,21]: leaving at 8 waits 4 at the second stop,
  // leaving at 10 only 2.
  const auto inst = hand_instance({{0, 2, 50}, {50, 0, 2}, {2, 50, 0}}, {0, 4, 0},
                                  {{{0, 100}}, {{10, 12}}, {{20, 21}}});
  const std::vector<int> route{1, 2};
  const auto best = oracle::min_duration(inst, route);
  REQUIRE(best.feasible);
  CHECK(best.route_start == 10);
  CHECK(best.duration == 12);
  CHECK(oracle::min_duration_by_departure_sweep(inst, route) == best.duration);
}

TEST_CASE("the two duration oracles agree on short random routes") {
  std::mt19937_64 rng(11);
  int feasible = 0;
  for (int i = 0; i < 3000; ++i) {
    testing::RouteCaseShape shape;
    shape.max_route = 4;
    shape.spare = 0;
    shape.scramble = i % 3 == 0;
    const auto c = testing::random_route_case(rng, shape);
    const auto best = oracle::min_duration(c.instance, c.route);
    const Time sweep = oracle::min_duration_by_departure_sweep(c.instance, c.route);
    CHECK(best.duration == sweep);
    feasible += best.feasible;
  }
  CHECK(feasible > 1500);
}

TEST_CASE("witness schedules respect windows, precedence and the deadline") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const auto c = testing::random_route_case(rng, {});
    const auto best = oracle::min_duration(c.instance, c.route);
    REQUIRE(best.feasible);
    Time at = best.route_start;
    int prev = 0;
    for (std::size_t k = 0; k < c.route.size(); ++k) {
      const int v = c.route[k];
      const auto& w = c.instance.windows(v)[best.window_choice[k]];
      CHECK(best.service_starts[k] >= at + c.instance.service(prev) + c.instance.travel(prev, v));
      CHECK(w.contains(best.service_starts[k]));
      at = best.service_starts[k];
      prev = v;
    }
    const Time end = at + c.instance.service(prev) + c.instance.travel(prev, 0);
    CHECK(end <= c.instance.route_close());
    CHECK(end - best.route_start == doctest::Approx(best.duration));
  }
}

TEST_CASE("adding a window never lengthens the best route") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    testing::RouteCaseShape shape;
    shape.max_windows = 2;
    shape.scramble = i % 2 == 0;
    auto c = testing::random_route_case(rng, shape);
    if (c.route.empty()) {
      continue;
    }
    const Time before = oracle::min_duration(c.instance, c.route).duration;
    // A wide window after every existing one.
    const int v = c.route[static_cast<std::size_t>(i) % c.route.size()];
    auto& windows = c.instance.nodes[v].windows;
    const Time lo = windows.back().upper + 1;
    windows.push_back({lo, lo + 100});
    CHECK(oracle::min_duration(c.instance, c.route).duration <= before);
  }
}

TEST_CASE("distance-only insertion cost is the arc detour") {
  std::mt19937_64 rng(14);
  int feasible = 0;
  for (int i = 0; i < 300; ++i) {
    testing::RouteCaseShape shape;
    shape.separate_costs = true;
    const auto c = testing::random_route_case(rng, shape);
    for (std::size_t after = 0; after <= c.route.size(); ++after) {
      const int v = c.spare.front();
      const auto ins = oracle::cheapest_insertion(c.instance, c.route, after, v, false);
      if (!ins.feasible) {
        continue;
      }
      ++feasible;
      const int prev = after == 0 ? 0 : c.route[after - 1];
      const int next = after == c.route.size() ? 0 : c.route[after];
      const auto& arc = c.instance.arc_cost;
      CHECK(ins.cost == doctest::Approx(arc(prev, v) + arc(v, next) - arc(prev, next)));
    }
  }
  CHECK(feasible > 0);
}

TEST_CASE("insertion outside every reachable window is infeasible") {
  const auto inst = hand_instance({{0, 5, 5}, {5, 0, 5}, {5, 5, 0}}, {0, 0, 0},
                                  {{{0, 40}}, {{10, 20}}, {{0, 2}, {50, 60}}});
  const std::vector<int> route{1};
  for (std::size_t after = 0; after <= 1; ++after) {
    CHECK_FALSE(oracle::cheapest_insertion(inst, route, after, 2, false).feasible);
    CHECK_FALSE(oracle::cheapest_insertion(inst, route, after, 2, true).feasible);
    CHECK(oracle::insertion_feasible_per_window(inst, route, after, 2) == std::vector<bool>{false, false});
  }
}

TEST_CASE("enumeration guard") {
  std::vector<std::vector<double>> travel(22, std::vector<double>(22, 1.0));
  std::vector<std::vector<TimeWindow>> windows(22, {{0, 1}, {5, 1000}});
  windows[0] = {{0, 1e6}};
  for (int i = 0; i < 22; ++i) {
    travel[i][i] = 0;
  }
  const auto inst = hand_instance(travel, std::vector<double>(22, 0.0), windows);
  std::vector<int> route;
  for (int v = 1; v <= 21; ++v) {
    route.push_back(v);
  }
  CHECK_THROWS_AS(oracle::min_duration(inst, route), std::length_error);
}

TEST_CASE("exhaustive optimum on trivial instances") {
  SUBCASE("one visit, one route") {
    auto inst = single_visit({0, 100}, 7, 0);
    inst.vehicle_cost = 10;
    const auto best = oracle::exhaustive_optimum(inst);
    REQUIRE(best.feasible);
    CHECK(best.cost == 24);
    CHECK(best.routes == std::vector<std::vector<int>>{{1}});
  }
  SUBCASE("capacity one forces a route per visit") {
    auto inst = hand_instance({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}, {0, 0, 0, 0},
                              {{{0, 100}}, {{0, 100}}, {{0, 100}}, {{0, 100}}});
    inst.capacity = 1;
    const auto best = oracle::exhaustive_optimum(inst);
    REQUIRE(best.feasible);
    CHECK(best.routes.size() == 3);
    CHECK(best.cost == 6);
  }
}

TEST_CASE("exhaustive optimum finds a solution for generated small instances") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 10; ++i) {
    const auto inst = testing::random_small_instance(rng, 6, 2, i % 2 == 1);
    const auto best = oracle::exhaustive_optimum(inst);
    CHECK(best.feasible);
  }
}
