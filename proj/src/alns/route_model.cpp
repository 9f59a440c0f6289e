#include "vrpmtw/alns/route_model.h"

namespace vrpmtw::alns {

RouteModel::RouteModel(const Instance& instance, bool minimise_time, WindowMode mode)
    : instance_(&instance), minimise_time_(minimise_time), mode_(mode) {}

LabelOptions RouteModel::label_options(const Route& route) const {
  LabelOptions options;
  if (mode_ == WindowMode::fixed) {
    options.fixed_windows = route.windows;
  }
  return options;
}

Route RouteModel::make_route(std::vector<int> visits, std::vector<int> windows) const {
  Route route;
  route.visits = std::move(visits);
  if (mode_ == WindowMode::fixed && windows.empty()) {
    // Start from the windows of an optimal schedule.
    const auto best = min_route_duration(*instance_, route.visits);
    for (const auto& stop : best.stops) {
      windows.push_back(stop.window);
    }
    if (!best.feasible) {
      windows.assign(route.visits.size(), 0);
    }
  }
  if (mode_ == WindowMode::fixed) {
    route.windows = std::move(windows);
  }
  rebuild(route);
  return route;
}

void RouteModel::refresh_totals(Route& route) const {
  route.load = route_load(*instance_, route.visits);
  route.arcs = route_arc_cost(*instance_, route.visits);
  route.travel = route_travel(*instance_, route.visits);
  bool feasible = true;
  if (uses_labels()) {
    route.duration = route.labels.min_duration();
    feasible = route.labels.feasible();
  } else {
    feasible = route.slack.feasible;
  }
  if (!feasible) {
    route.cost = kInfinity;
  } else if (minimise_time_) {
    route.cost = route.arcs + route.duration - route.travel;
  } else {
    route.cost = route.arcs;
  }
}

void RouteModel::rebuild(Route& route) const {
  if (uses_labels()) {
    route.labels = build_labels(*instance_, route.visits, label_options(route));
  } else {
    route.slack = update_slacks(*instance_, route.visits);
  }
  refresh_totals(route);
}

InsertionOption RouteModel::best_insertion(const Route& route, int visit) const {
  InsertionOption best;
  const auto& visits = route.visits;
  for (std::size_t after = 0; after <= visits.size(); ++after) {
    double cost = kInfinity;
    int window = -1;
    if (uses_labels()) {
      const auto ins = cheapest_insertion_b1(*instance_, visits, route.labels, after, visit, route.duration);
      if (!ins.feasible) {
        continue;
      }
      window = ins.window;
      cost = minimise_time_ ? ins.cost : delta_distance(*instance_, visits, after, visit);
    } else {
      window = first_feasible_window(*instance_, visits, route.slack, after, visit);
      if (window < 0) {
        continue;
      }
      cost = delta_distance(*instance_, visits, after, visit);
    }
    if (cost < best.cost) {
      best = {true, cost, after, window};
    }
  }
  return best;
}

void RouteModel::insert(Route& route, const InsertionOption& option, int visit) const {
  const auto at = static_cast<std::ptrdiff_t>(option.after);
  route.visits.insert(route.visits.begin() + at, visit);
  if (mode_ == WindowMode::fixed) {
    route.windows.insert(route.windows.begin() + at, option.window);
  }
  if (uses_labels()) {
    refresh_labels(route.labels, *instance_, route.visits, option.after + 1, option.after + 2, 1,
                   label_options(route));
  } else {
    refresh_slacks(route.slack, *instance_, route.visits, option.after + 1, option.after + 2, 1);
  }
  refresh_totals(route);
}

void RouteModel::remove(Route& route, const std::vector<char>& removed) const {
  std::size_t out = 0;
  for (std::size_t k = 0; k < route.visits.size(); ++k) {
    if (removed[static_cast<std::size_t>(route.visits[k])]) {
      continue;
    }
    route.visits[out] = route.visits[k];
    if (mode_ == WindowMode::fixed) {
      route.windows[out] = route.windows[k];
    }
    ++out;
  }
  if (out == route.visits.size()) {
    return;
  }
  route.visits.resize(out);
  if (mode_ == WindowMode::fixed) {
    route.windows.resize(out);
  }
  rebuild(route);
}

std::vector<ScheduledStop> RouteModel::schedule(const Route& route) const {
  if (uses_labels()) {
    return schedule_from_labels(*instance_, route.visits, route.labels).stops;
  }
  std::vector<ScheduledStop> stops;
  for (std::size_t k = 0; k < route.visits.size(); ++k) {
    const int v = route.visits[k];
    const Time at = route.slack.es[k + 1];
    const auto& windows = instance_->windows(v);
    int window = 0;
    while (window + 1 < static_cast<int>(windows.size()) && windows[static_cast<std::size_t>(window)].upper < at) {
      ++window;
    }
    stops.push_back({v, window, at});
  }
  return stops;
}

}  // namespace vrpmtw::alns
