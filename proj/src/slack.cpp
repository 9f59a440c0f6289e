#include "vrpmtw/slack.h"

#include <algorithm>

namespace vrpmtw {

namespace {

TimeWindow depot_window(const Instance& instance) {
  return {instance.route_open(), instance.route_close()};
}

// Earliest service start at `node` when the vehicle can be ready at
// `arrival`: the first window still open, entered as early as possible.
Time earliest_in(const Instance& instance, int node, Time arrival) {
  if (node == 0) {
    const auto w = depot_window(instance);
    return arrival <= w.upper ? std::max(arrival, w.lower) : kInfinity;
  }
  for (const auto& w : instance.windows(node)) {
    if (w.upper >= arrival) {
      return std::max(arrival, w.lower);
    }
  }
  return kInfinity;
}

// Latest service start at `node` such that it ends by `deadline`.
Time latest_in(const Instance& instance, int node, Time deadline) {
  if (node == 0) {
    const auto w = depot_window(instance);
    return deadline >= w.lower ? std::min(deadline, w.upper) : -kInfinity;
  }
  const auto& windows = instance.windows(node);
  for (auto it = windows.rbegin(); it != windows.rend(); ++it) {
    if (it->lower <= deadline) {
      return std::min(deadline, it->upper);
    }
  }
  return -kInfinity;
}

void compute_es(SlackState& state, const Instance& instance, std::span<const int> route, std::size_t from) {
  const std::size_t last = route.size() + 1;
  if (from == 0) {
    state.es[0] = instance.route_open();
    from = 1;
  }
  for (std::size_t k = from; k <= last; ++k) {
    const int prev = node_at(route, k - 1);
    const int node = node_at(route, k);
    const Time before = state.es[k - 1];
    state.es[k] = before == kInfinity
                      ? kInfinity
                      : earliest_in(instance, node, before + instance.service(prev) + instance.travel(prev, node));
  }
}

void compute_ls(SlackState& state, const Instance& instance, std::span<const int> route, std::size_t below) {
  const std::size_t last = route.size() + 1;
  std::size_t k = below;
  if (below > last) {
    state.ls[last] = instance.route_close();
    k = last;
  }
  while (k-- > 0) {
    const int node = node_at(route, k);
    const int next = node_at(route, k + 1);
    const Time after = state.ls[k + 1];
    state.ls[k] = after == -kInfinity
                      ? -kInfinity
                      : latest_in(instance, node, after - instance.travel(node, next) - instance.service(node));
  }
}

}  // namespace

SlackState update_slacks(const Instance& instance, std::span<const int> route) {
  SlackState state;
  state.es.assign(route.size() + 2, kInfinity);
  state.ls.assign(route.size() + 2, -kInfinity);
  compute_es(state, instance, route, 0);
  compute_ls(state, instance, route, route.size() + 2);
  state.feasible = state.es.back() <= instance.route_close();
  return state;
}

void refresh_slacks(SlackState& state, const Instance& instance, std::span<const int> route,
                    std::size_t es_from, std::size_t ls_from, std::ptrdiff_t shift) {
  const std::size_t size = route.size() + 2;
  std::vector<Time> ls(size, -kInfinity);
  for (std::size_t p = ls_from; p < size; ++p) {
    ls[p] = state.ls[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(p) - shift)];
  }
  state.ls = std::move(ls);
  state.es.resize(size, kInfinity);
  compute_es(state, instance, route, std::min(es_from, size - 1));
  compute_ls(state, instance, route, std::min(ls_from, size + 1));
  state.feasible = state.es.back() <= instance.route_close();
}

std::vector<bool> feasible_insertion_b0(const Instance& instance, std::span<const int> route,
                                        const SlackState& state, std::size_t after, int visit) {
  const int prev = node_at(route, after);
  const int next = node_at(route, after + 1);
  // Ready time at `visit` and the latest start that still lets `next` begin by ls.
  const Time ready = state.es[after] + instance.service(prev) + instance.travel(prev, visit);
  const Time latest = state.ls[after + 1] - instance.travel(visit, next) - instance.service(visit);
  const auto& windows = instance.windows(visit);
  std::vector<bool> result(windows.size(), false);
  for (std::size_t p = 0; p < windows.size(); ++p) {
    // Both one-sided tests plus the combined one; the one-sided tests alone
    // accept an insertion whose ready time exceeds the latest start.
    result[p] = ready <= windows[p].upper && latest >= windows[p].lower && ready <= latest;
  }
  return result;
}

int first_feasible_window(const Instance& instance, std::span<const int> route,
                          const SlackState& state, std::size_t after, int visit) {
  const int prev = node_at(route, after);
  const int next = node_at(route, after + 1);
  const Time ready = state.es[after] + instance.service(prev) + instance.travel(prev, visit);
  const Time latest = state.ls[after + 1] - instance.travel(visit, next) - instance.service(visit);
  if (ready > latest) {
    return -1;
  }
  const auto& windows = instance.windows(visit);
  for (std::size_t p = 0; p < windows.size(); ++p) {
    if (windows[p].lower > latest) {
      break;
    }
    if (ready <= windows[p].upper) {
      return static_cast<int>(p);
    }
  }
  return -1;
}

double delta_distance(const Instance& instance, std::span<const int> route, std::size_t after, int visit) {
  const int prev = node_at(route, after);
  const int next = node_at(route, after + 1);
  return instance.arc_cost(prev, visit) + instance.arc_cost(visit, next) - instance.arc_cost(prev, next);
}

}  // namespace vrpmtw
