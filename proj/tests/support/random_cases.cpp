#include "random_cases.h"

#include <algorithm>
#include <numeric>

namespace vrpmtw::testing {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Adds `count` windows that avoid the existing ones, then sorts.
void add_decoys(std::mt19937_64& rng, std::vector<TimeWindow>& windows, int count, int horizon) {
  for (int tries = 0; count > 0 && tries < 50; ++tries) {
    const int lo = uniform(rng, 0, std::max(0, horizon));
    const TimeWindow w{static_cast<Time>(lo), static_cast<Time>(lo + uniform(rng, 0, 20))};
    const bool clash = std::any_of(windows.begin(), windows.end(), [&](const TimeWindow& x) {
      return w.lower <= x.upper + 1 && x.lower <= w.upper + 1;
    });
    if (!clash) {
      windows.push_back(w);
      --count;
    }
  }
  std::sort(windows.begin(), windows.end(), [](const auto& a, const auto& b) { return a.lower < b.lower; });
}

TimeWindow around(std::mt19937_64& rng, Time at) {
  return {std::max(0.0, at - uniform(rng, 0, 15)), at + uniform(rng, 0, 15)};
}

}  // namespace

RouteCase random_route_case(std::mt19937_64& rng, const RouteCaseShape& shape) {
  const int length = uniform(rng, 0, shape.max_route);
  const int total = length + shape.spare;
  RouteCase c;
  auto& inst = c.instance;
  inst.name = "random";
  inst.nodes.resize(static_cast<std::size_t>(total) + 1);
  inst.travel = Matrix(inst.nodes.size());
  inst.arc_cost = Matrix(inst.nodes.size());
  for (std::size_t i = 0; i < inst.nodes.size(); ++i) {
    inst.nodes[i].id = static_cast<int>(i);
    inst.nodes[i].service = i == 0 ? 0 : uniform(rng, 0, 10);
    inst.nodes[i].demand = i == 0 ? 0 : 1;
    for (std::size_t j = 0; j < inst.nodes.size(); ++j) {
      if (i != j) {
        inst.travel(i, j) = uniform(rng, 1, 30);
        inst.arc_cost(i, j) = shape.separate_costs ? uniform(rng, 1, 30) : inst.travel(i, j);
      }
    }
  }
  inst.capacity = 1000;

  c.route.resize(static_cast<std::size_t>(length));
  std::iota(c.route.begin(), c.route.end(), 1);
  std::shuffle(c.route.begin(), c.route.end(), rng);

  Time at = uniform(rng, 0, 40);
  int prev = 0;
  for (const int v : c.route) {
    at += inst.service(prev) + inst.travel(prev, v);
    if (uniform(rng, 0, 1) == 1) {
      at += uniform(rng, 0, 20);
    }
    inst.nodes[v].windows = {around(rng, at)};
    prev = v;
  }
  const int close = static_cast<int>(at + inst.service(prev) + inst.travel(prev, 0)) + uniform(rng, 0, 60);
  inst.nodes[0].windows = {{0, static_cast<Time>(close)}};

  for (int v = 1; v <= total; ++v) {
    auto& windows = inst.nodes[v].windows;
    const int count = uniform(rng, 1, shape.max_windows);
    if (windows.empty()) {
      const int lo = uniform(rng, 0, close);
      windows.push_back({static_cast<Time>(lo), static_cast<Time>(lo + uniform(rng, 0, 30))});
    }
    add_decoys(rng, windows, count - 1, close);
  }
  for (int v = length + 1; v <= total; ++v) {
    c.spare.push_back(v);
  }
  if (shape.scramble) {
    std::shuffle(c.route.begin(), c.route.end(), rng);
  }
  return c;
}

Instance random_small_instance(std::mt19937_64& rng, int visits, int max_windows, bool minimise_time) {
  Instance inst;
  inst.name = "small";
  inst.precision = 0;
  inst.minimise_time = minimise_time;
  inst.nodes.resize(static_cast<std::size_t>(visits) + 1);
  for (std::size_t i = 0; i < inst.nodes.size(); ++i) {
    auto& n = inst.nodes[i];
    n.id = static_cast<int>(i);
    n.x = uniform(rng, 0, 50);
    n.y = uniform(rng, 0, 50);
    n.service = i == 0 ? 0 : uniform(rng, 0, 10);
    n.demand = i == 0 ? 0 : uniform(rng, 1, 10);
  }
  inst.nodes[0].windows = {{0, 1e9}};
  compute_euclidean_travel(inst);

  std::vector<int> order(static_cast<std::size_t>(visits));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);

  double capacity = 0;
  Time latest_end = 0;
  for (std::size_t k = 0; k < order.size();) {
    const std::size_t size = std::min<std::size_t>(order.size() - k, static_cast<std::size_t>(uniform(rng, 1, 4)));
    Time at = uniform(rng, 0, 60);
    int prev = 0;
    double load = 0;
    for (std::size_t i = k; i < k + size; ++i) {
      const int v = order[i];
      at += inst.service(prev) + inst.travel(prev, v) + (uniform(rng, 0, 2) == 0 ? uniform(rng, 0, 15) : 0);
      inst.nodes[v].windows = {around(rng, at)};
      load += inst.nodes[v].demand;
      prev = v;
    }
    latest_end = std::max(latest_end, at + inst.service(prev) + inst.travel(prev, 0));
    capacity = std::max(capacity, load);
    k += size;
  }
  const int close = static_cast<int>(latest_end) + uniform(rng, 0, 30);
  inst.nodes[0].windows = {{0, static_cast<Time>(close)}};
  for (int v = 1; v <= visits; ++v) {
    add_decoys(rng, inst.nodes[v].windows, uniform(rng, 1, max_windows) - 1, close);
  }
  inst.capacity = capacity + uniform(rng, 0, 10);
  inst.vehicle_cost = inst.capacity;
  return inst;
}

Instance hand_instance(const std::vector<std::vector<double>>& travel, const std::vector<double>& service,
                       const std::vector<std::vector<TimeWindow>>& windows) {
  Instance inst;
  inst.name = "hand";
  const std::size_t n = travel.size();
  inst.nodes.resize(n);
  inst.travel = Matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    inst.nodes[i].id = static_cast<int>(i);
    inst.nodes[i].service = service[i];
    inst.nodes[i].demand = i == 0 ? 0 : 1;
    inst.nodes[i].windows = windows[i];
    for (std::size_t j = 0; j < n; ++j) {
      inst.travel(i, j) = travel[i][j];
    }
  }
  inst.arc_cost = inst.travel;
  inst.capacity = 1000;
  return inst;
}

}  // namespace vrpmtw::testing
