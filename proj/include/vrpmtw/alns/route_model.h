#pragma once

#include <vector>

#include "vrpmtw/alns/config.h"
#include "vrpmtw/instance.h"
#include "vrpmtw/labels.h"
#include "vrpmtw/slack.h"
#include "vrpmtw/solution.h"

namespace vrpmtw::alns {

// A route with the cached state its evaluation mode needs.
struct Route {
  std::vector<int> visits;
  // Window per visit; only maintained in fixed-window mode.
  std::vector<int> windows;
  double load = 0;
  double arcs = 0;
  Time travel = 0;
  Time duration = 0;
  double cost = 0;  // objective contribution without the vehicle cost
  SlackState slack;
  RouteLabels labels;

  bool empty() const { return visits.empty(); }
};

struct InsertionOption {
  bool feasible = false;
  double cost = kInfinity;
  std::size_t after = 0;  // extended position the visit follows
  int window = -1;
};

// Evaluates routes under one objective variant and window mode. The
// distance-only variant with implicit windows runs on earliest/latest
// starts; everything else runs on labels.
class RouteModel {
 public:
  RouteModel(const Instance& instance, bool minimise_time, WindowMode mode);

  const Instance& instance() const { return *instance_; }
  bool minimise_time() const { return minimise_time_; }
  WindowMode mode() const { return mode_; }

  Route make_route(std::vector<int> visits, std::vector<int> windows = {}) const;
  void rebuild(Route& route) const;

  // Cheapest feasible position (earliest on ties); ignores capacity.
  InsertionOption best_insertion(const Route& route, int visit) const;
  bool fits(const Route& route, int visit) const {
    return route.load + instance_->nodes[visit].demand <= instance_->capacity;
  }

  void insert(Route& route, const InsertionOption& option, int visit) const;
  // Drops the given visits (if present) and rebuilds.
  void remove(Route& route, const std::vector<char>& removed) const;

  // Service start per visit: the minimal-duration witness when time is
  // minimised, otherwise the earliest feasible start.
  std::vector<ScheduledStop> schedule(const Route& route) const;

 private:
  bool uses_labels() const { return minimise_time_ || mode_ == WindowMode::fixed; }
  LabelOptions label_options(const Route& route) const;
  void refresh_totals(Route& route) const;

  const Instance* instance_;
  bool minimise_time_;
  WindowMode mode_;
};

}  // namespace vrpmtw::alns
