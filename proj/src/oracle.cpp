#include "vrpmtw/oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace vrpmtw::oracle {

namespace {

int node(std::span<const int> route, std::size_t position) {
  return position == 0 || position > route.size() ? 0 : route[position - 1];
}

std::vector<TimeWindow> windows_at(const Instance& instance, std::span<const int> route, std::size_t position) {
  const int v = node(route, position);
  if (v == 0) {
    return {{instance.route_open(), instance.route_close()}};
  }
  return instance.windows(v);
}

void check_size(const Instance& instance, std::span<const int> route) {
  double combos = 1;
  for (const int v : route) {
    combos *= static_cast<double>(instance.windows(v).size());
  }
  if (combos > static_cast<double>(kMaxAssignments)) {
    throw std::length_error("too many window assignments to enumerate");
  }
}

// Serves the stops in the given windows, leaving the depot at `start`.
// Returns the end-depot arrival or +inf if a window is missed.
Time propagate(const Instance& instance, std::span<const int> route, std::span<const int> choice, Time start,
               std::vector<Time>* starts = nullptr) {
  Time at = start;
  int prev = 0;
  for (std::size_t k = 0; k < route.size(); ++k) {
    const int v = route[k];
    const auto& w = instance.windows(v)[static_cast<std::size_t>(choice[k])];
    at = std::max(at + instance.service(prev) + instance.travel(prev, v), w.lower);
    if (at > w.upper) {
      return kInfinity;
    }
    if (starts) {
      starts->push_back(at);
    }
    prev = v;
  }
  const Time end = at + instance.service(prev) + instance.travel(prev, 0);
  return end <= instance.route_close() ? end : kInfinity;
}

// Calls f(choice) for every full window assignment compatible with `fixed`.
void for_each_assignment(const Instance& instance, std::span<const int> route, std::span<const int> fixed,
                         const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> choice(route.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == route.size()) {
      f(choice);
      return;
    }
    const int count = static_cast<int>(instance.windows(route[k]).size());
    for (int p = 0; p < count; ++p) {
      if (!fixed.empty() && fixed[k] >= 0 && fixed[k] != p) {
        continue;
      }
      choice[k] = p;
      rec(k + 1);
    }
  };
  rec(0);
}

}  // namespace

AssignmentSchedule min_duration(const Instance& instance, std::span<const int> route, std::span<const int> fixed) {
  check_size(instance, route);
  const Time open = instance.route_open();
  const Time close = instance.route_close();
  AssignmentSchedule best;

  for_each_assignment(instance, route, fixed, [&](const std::vector<int>& choice) {
    std::vector<Time> candidates{open};
    Time driven = 0;
    int prev = 0;
    for (std::size_t k = 0; k < route.size(); ++k) {
      const int v = route[k];
      driven += instance.service(prev) + instance.travel(prev, v);
      const auto& w = instance.windows(v)[static_cast<std::size_t>(choice[k])];
      candidates.push_back(w.lower - driven);
      candidates.push_back(w.upper - driven);
      prev = v;
    }
    driven += instance.service(prev) + instance.travel(prev, 0);
    candidates.push_back(close - driven);

    for (const Time s : candidates) {
      if (s < open || s > close) {
        continue;
      }
      const Time end = propagate(instance, route, choice, s);
      if (end - s < best.duration) {
        best.feasible = true;
        best.duration = end - s;
        best.route_start = s;
        best.window_choice = choice;
      }
    }
  });

  if (best.feasible) {
    propagate(instance, route, best.window_choice, best.route_start, &best.service_starts);
  }
  return best;
}

Time min_duration_by_departure_sweep(const Instance& instance, std::span<const int> route) {
  Time best = kInfinity;
  const auto first = static_cast<long long>(std::ceil(instance.route_open()));
  const auto last = static_cast<long long>(std::floor(instance.route_close()));
  for (long long s = first; s <= last; ++s) {
    Time at = static_cast<Time>(s);
    int prev = 0;
    bool ok = true;
    for (const int v : route) {
      const Time ready = at + instance.service(prev) + instance.travel(prev, v);
      ok = false;
      for (const auto& w : instance.windows(v)) {
        if (ready <= w.upper) {
          at = std::max(ready, w.lower);
          ok = true;
          break;
        }
      }
      if (!ok) {
        break;
      }
      prev = v;
    }
    if (!ok) {
      continue;
    }
    const Time end = at + instance.service(prev) + instance.travel(prev, 0);
    if (end <= instance.route_close()) {
      best = std::min(best, end - static_cast<Time>(s));
    }
  }
  return best;
}

std::vector<Time> earliest_starts(const Instance& instance, std::span<const int> route) {
  check_size(instance, route);
  const std::size_t last = route.size() + 1;
  std::vector<Time> es(last + 1, kInfinity);
  es[0] = instance.route_open();
  std::function<void(std::size_t, Time)> rec = [&](std::size_t k, Time at) {
    if (k > last) {
      return;
    }
    const int prev = node(route, k - 1);
    const Time ready = at + instance.service(prev) + instance.travel(prev, node(route, k));
    for (const auto& w : windows_at(instance, route, k)) {
      const Time start = std::max(ready, w.lower);
      if (start <= w.upper) {
        es[k] = std::min(es[k], start);
        rec(k + 1, start);
      }
    }
  };
  rec(1, es[0]);
  return es;
}

std::vector<Time> latest_starts(const Instance& instance, std::span<const int> route) {
  check_size(instance, route);
  const std::size_t last = route.size() + 1;
  std::vector<Time> ls(last + 1, -kInfinity);
  ls[last] = instance.route_close();
  std::function<void(std::size_t, Time)> rec = [&](std::size_t k, Time next_start) {
    const int here = node(route, k);
    const Time deadline = next_start - instance.travel(here, node(route, k + 1)) - instance.service(here);
    for (const auto& w : windows_at(instance, route, k)) {
      const Time start = std::min(deadline, w.upper);
      if (start >= w.lower) {
        ls[k] = std::max(ls[k], start);
        if (k > 0) {
          rec(k - 1, start);
        }
      }
    }
  };
  if (ls[last] >= instance.route_open()) {
    rec(last - 1, ls[last]);
  } else {
    ls[last] = -kInfinity;
  }
  return ls;
}

bool route_feasible(const Instance& instance, std::span<const int> route, std::span<const int> fixed) {
  check_size(instance, route);
  bool found = false;
  for_each_assignment(instance, route, fixed, [&](const std::vector<int>& choice) {
    // Leaving as early as possible is never worse for feasibility.
    if (!found && propagate(instance, route, choice, instance.route_open()) < kInfinity) {
      found = true;
    }
  });
  return found;
}

std::vector<int> with_insertion(std::span<const int> route, std::size_t after, int visit) {
  std::vector<int> out(route.begin(), route.end());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(after), visit);
  return out;
}

double route_cost(const Instance& instance, std::span<const int> route, bool minimise_time) {
  double arcs = 0;
  Time travel = 0;
  int prev = 0;
  for (const int v : route) {
    arcs += instance.arc_cost(prev, v);
    travel += instance.travel(prev, v);
    prev = v;
  }
  arcs += instance.arc_cost(prev, 0);
  travel += instance.travel(prev, 0);
  if (!minimise_time) {
    return route_feasible(instance, route) ? arcs : kInfinity;
  }
  const auto best = min_duration(instance, route);
  return best.feasible ? arcs + best.duration - travel : kInfinity;
}

Insertion cheapest_insertion(const Instance& instance, std::span<const int> route, std::size_t after, int visit,
                             bool minimise_time) {
  const double before = route_cost(instance, route, minimise_time);
  const auto extended = with_insertion(route, after, visit);
  const double now = route_cost(instance, extended, minimise_time);
  if (before == kInfinity || now == kInfinity) {
    return {};
  }
  return {true, now - before};
}

std::vector<bool> insertion_feasible_per_window(const Instance& instance, std::span<const int> route,
                                                std::size_t after, int visit) {
  const auto extended = with_insertion(route, after, visit);
  std::vector<int> fixed(extended.size(), -1);
  const auto count = instance.windows(visit).size();
  std::vector<bool> out(count, false);
  for (std::size_t p = 0; p < count; ++p) {
    fixed[after] = static_cast<int>(p);
    out[p] = route_feasible(instance, extended, fixed);
  }
  return out;
}

Optimum exhaustive_optimum(const Instance& instance) {
  const int n = static_cast<int>(instance.num_visits());
  if (n > 12) {
    throw std::length_error("exhaustive optimum needs at most 12 visits");
  }
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<double> route_best(subsets, kInfinity);
  std::vector<std::vector<int>> route_order(subsets);
  route_best[0] = 0;

  std::vector<int> sequence;
  std::function<void(std::uint32_t, Time, double, double)> extend = [&](std::uint32_t mask, Time at, double load,
                                                                       double arcs) {
    const int prev = sequence.empty() ? 0 : sequence.back();
    if (!sequence.empty()) {
      const Time back = at + instance.service(prev) + instance.travel(prev, 0);
      if (back <= instance.route_close()) {
        double cost = arcs + instance.arc_cost(prev, 0);
        if (instance.minimise_time) {
          cost = route_cost(instance, sequence, true);
        }
        cost += instance.vehicle_cost;
        if (cost < route_best[mask]) {
          route_best[mask] = cost;
          route_order[mask] = sequence;
        }
      }
    }
    for (int v = 1; v <= n; ++v) {
      const std::uint32_t bit = 1u << (v - 1);
      if ((mask & bit) || load + instance.nodes[v].demand > instance.capacity) {
        continue;
      }
      // Earliest possible service start; a later start can never help
      // feasibility of the remaining stops.
      const Time ready = at + instance.service(prev) + instance.travel(prev, v);
      Time start = kInfinity;
      for (const auto& w : instance.windows(v)) {
        if (ready <= w.upper) {
          start = std::max(ready, w.lower);
          break;
        }
      }
      if (start == kInfinity) {
        continue;
      }
      sequence.push_back(v);
      extend(mask | bit, start, load + instance.nodes[v].demand, arcs + instance.arc_cost(prev, v));
      sequence.pop_back();
    }
  };
  extend(0, instance.route_open(), 0, 0);

  // Partition the visits into routes: best[S] over subsets containing the
  // lowest member of S.
  std::vector<double> best(subsets, kInfinity);
  std::vector<std::uint32_t> pick(subsets, 0);
  best[0] = 0;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const std::uint32_t low = s & (~s + 1);
    for (std::uint32_t t = s; t > 0; t = (t - 1) & s) {
      if (!(t & low) || route_best[t] == kInfinity || best[s ^ t] == kInfinity) {
        continue;
      }
      const double c = route_best[t] + best[s ^ t];
      if (c < best[s]) {
        best[s] = c;
        pick[s] = t;
      }
    }
  }

  Optimum out;
  const std::uint32_t all = static_cast<std::uint32_t>(subsets - 1);
  if (best[all] == kInfinity) {
    return out;
  }
  out.feasible = true;
  out.cost = best[all];
  for (std::uint32_t s = all; s != 0; s ^= pick[s]) {
    out.routes.push_back(route_order[pick[s]]);
  }
  return out;
}

}  // namespace vrpmtw::oracle
