#include "vrpmtw/solution.h"

#include <algorithm>
#include <stdexcept>

namespace vrpmtw {

std::size_t Solution::used_routes() const {
  return static_cast<std::size_t>(
      std::count_if(routes.begin(), routes.end(), [](const auto& r) { return !r.empty(); }));
}

CostBreakdown evaluate_objective(const Instance& instance, const Solution& solution) {
  CostBreakdown cost;
  const bool timed = instance.minimise_time;
  if (timed && solution.schedules.size() != solution.routes.size()) {
    throw std::invalid_argument("time minimisation requires a schedule for every route");
  }
  for (std::size_t r = 0; r < solution.routes.size(); ++r) {
    const auto& route = solution.routes[r];
    if (route.empty()) {
      continue;
    }
    int prev = 0;
    for (const int v : route) {
      cost.distance += instance.arc_cost(prev, v);
      prev = v;
    }
    cost.distance += instance.arc_cost(prev, 0);
    cost.vehicle_term += instance.vehicle_cost;

    if (!timed) {
      continue;
    }
    const auto& stops = solution.schedules[r];
    if (stops.size() != route.size()) {
      throw std::invalid_argument("schedule length does not match route length");
    }
    for (std::size_t k = 0; k < stops.size(); ++k) {
      const int v = route[k];
      cost.time_term += instance.service(v);
      if (k > 0) {
        const int u = route[k - 1];
        const double ready = stops[k - 1].service_start + instance.service(u) + instance.travel(u, v);
        cost.time_term += std::max(0.0, stops[k].service_start - ready);
      }
    }
  }
  return cost;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::unknown_visit: return "unknown_visit";
    case ViolationKind::duplicate_visit: return "duplicate_visit";
    case ViolationKind::missing_visit: return "missing_visit";
    case ViolationKind::unassigned_visit: return "unassigned_visit";
    case ViolationKind::capacity: return "capacity";
    case ViolationKind::time_window: return "time_window";
    case ViolationKind::precedence: return "precedence";
    case ViolationKind::horizon_start: return "horizon_start";
    case ViolationKind::deadline: return "deadline";
    case ViolationKind::schedule_shape: return "schedule_shape";
    case ViolationKind::infeasible_route: return "infeasible_route";
  }
  return "unknown";
}

namespace {

void check_coverage(const Instance& instance, const Solution& solution, std::vector<Violation>& out) {
  const int n = static_cast<int>(instance.num_visits());
  std::vector<int> seen(instance.num_nodes(), 0);
  auto note = [&](int v, int route) {
    if (v < 1 || v > n) {
      out.push_back({ViolationKind::unknown_visit, route, v, "visit " + std::to_string(v) + " does not exist"});
      return;
    }
    if (++seen[v] == 2) {
      out.push_back({ViolationKind::duplicate_visit, route, v, "visit " + std::to_string(v) + " appears more than once"});
    }
  };
  for (std::size_t r = 0; r < solution.routes.size(); ++r) {
    for (const int v : solution.routes[r]) {
      note(v, static_cast<int>(r));
    }
  }
  for (const int v : solution.unassigned) {
    note(v, -1);
    if (v >= 1 && v <= n) {
      out.push_back({ViolationKind::unassigned_visit, -1, v, "visit " + std::to_string(v) + " is not served"});
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (seen[v] == 0) {
      out.push_back({ViolationKind::missing_visit, -1, v, "visit " + std::to_string(v) + " is neither routed nor listed as unassigned"});
    }
  }
}

bool known(const Instance& instance, int v) {
  return v >= 1 && static_cast<std::size_t>(v) < instance.num_nodes();
}

// Earliest-start propagation; waiting is free, so serving every stop as
// early as possible is feasible whenever any assignment is.
void check_unscheduled(const Instance& instance, const std::vector<int>& route, int r,
                       double tol, std::vector<Violation>& out) {
  Time at = instance.route_open();
  int prev = 0;
  for (const int v : route) {
    const Time arrival = at + instance.service(prev) + instance.travel(prev, v);
    bool served = false;
    for (const auto& w : instance.windows(v)) {
      if (arrival <= w.upper + tol) {
        at = std::max(arrival, w.lower);
        served = true;
        break;
      }
    }
    if (!served) {
      out.push_back({ViolationKind::infeasible_route, r, v,
                     "route " + std::to_string(r) + " cannot reach visit " + std::to_string(v) + " within any window"});
      return;
    }
    prev = v;
  }
  const Time back = at + instance.service(prev) + instance.travel(prev, 0);
  if (back > instance.route_close() + tol) {
    out.push_back({ViolationKind::deadline, r, -1, "route " + std::to_string(r) + " returns after the deadline"});
  }
}

void check_scheduled(const Instance& instance, const std::vector<int>& route,
                     const std::vector<ScheduledStop>& stops, int r, double tol,
                     std::vector<Violation>& out) {
  if (stops.size() != route.size()) {
    out.push_back({ViolationKind::schedule_shape, r, -1, "route " + std::to_string(r) + " schedule length mismatch"});
    return;
  }
  for (std::size_t k = 0; k < stops.size(); ++k) {
    if (stops[k].visit != route[k]) {
      out.push_back({ViolationKind::schedule_shape, r, route[k], "route " + std::to_string(r) + " schedule order differs from route"});
      return;
    }
  }
  int prev = 0;
  Time prev_start = 0;
  for (std::size_t k = 0; k < stops.size(); ++k) {
    const int v = route[k];
    const auto& stop = stops[k];
    const auto& windows = instance.windows(v);
    if (stop.window < 0 || static_cast<std::size_t>(stop.window) >= windows.size()) {
      out.push_back({ViolationKind::schedule_shape, r, v, "visit " + std::to_string(v) + " has no window " + std::to_string(stop.window)});
    } else {
      const auto& w = windows[stop.window];
      if (stop.service_start < w.lower - tol || stop.service_start > w.upper + tol) {
        out.push_back({ViolationKind::time_window, r, v, "visit " + std::to_string(v) + " served outside its chosen window"});
      }
    }
    if (k == 0) {
      if (stop.service_start - instance.travel(0, v) < instance.route_open() - tol) {
        out.push_back({ViolationKind::horizon_start, r, v, "route " + std::to_string(r) + " would leave the depot before it opens"});
      }
    } else if (stop.service_start < prev_start + instance.service(prev) + instance.travel(prev, v) - tol) {
      out.push_back({ViolationKind::precedence, r, v, "visit " + std::to_string(v) + " starts before the vehicle can arrive"});
    }
    prev = v;
    prev_start = stop.service_start;
  }
  const Time back = prev_start + instance.service(prev) + instance.travel(prev, 0);
  if (back > instance.route_close() + tol) {
    out.push_back({ViolationKind::deadline, r, -1, "route " + std::to_string(r) + " returns after the deadline"});
  }
}

}  // namespace

std::vector<Violation> validate_solution(const Instance& instance, const Solution& solution, double tolerance) {
  std::vector<Violation> out;
  check_coverage(instance, solution, out);

  const bool scheduled = !solution.schedules.empty();
  if (scheduled && solution.schedules.size() != solution.routes.size()) {
    out.push_back({ViolationKind::schedule_shape, -1, -1, "number of schedules differs from number of routes"});
  }
  for (std::size_t r = 0; r < solution.routes.size(); ++r) {
    const auto& route = solution.routes[r];
    const int ri = static_cast<int>(r);
    if (!std::all_of(route.begin(), route.end(), [&](int v) { return known(instance, v); })) {
      continue;
    }
    if (route_load(instance, route) > instance.capacity + tolerance) {
      out.push_back({ViolationKind::capacity, ri, -1, "route " + std::to_string(r) + " exceeds vehicle capacity"});
    }
    if (route.empty()) {
      continue;
    }
    if (scheduled && r < solution.schedules.size()) {
      check_scheduled(instance, route, solution.schedules[r], ri, tolerance, out);
    } else if (!scheduled) {
      check_unscheduled(instance, route, ri, tolerance, out);
    }
  }
  return out;
}

}  // namespace vrpmtw
