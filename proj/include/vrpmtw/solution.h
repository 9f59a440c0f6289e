#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vrpmtw/instance.h"

namespace vrpmtw {

struct ScheduledStop {
  int visit = 0;
  int window = 0;
  Time service_start = 0;

  friend bool operator==(const ScheduledStop&, const ScheduledStop&) = default;
};

struct CostBreakdown {
  double distance = 0;
  double time_term = 0;
  double vehicle_term = 0;
  double penalty_term = 0;

  double total() const { return distance + time_term + vehicle_term + penalty_term; }
  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

// Routes hold visit node indices (depots implicit). schedules is either
// empty or holds one stop list per route, aligned with the route's visits.
struct Solution {
  std::string instance_name;
  bool minimise_time = false;
  std::vector<std::vector<int>> routes;
  std::vector<std::vector<ScheduledStop>> schedules;
  std::vector<int> unassigned;
  CostBreakdown cost;
  std::uint64_t seed = 0;
  double wall_time = 0;

  std::size_t used_routes() const;
  friend bool operator==(const Solution&, const Solution&) = default;
};

// Objective: arc costs + B * (service + waiting) + vehicle cost per used
// route. Waiting before the first stop of a route is free since the vehicle
// leaves the depot when needed. Throws std::invalid_argument when B = 1 and
// the solution carries no schedules.
CostBreakdown evaluate_objective(const Instance& instance, const Solution& solution);

enum class ViolationKind {
  unknown_visit,
  duplicate_visit,
  missing_visit,
  unassigned_visit,
  capacity,
  time_window,
  precedence,
  horizon_start,
  deadline,
  schedule_shape,
  infeasible_route,
};

struct Violation {
  ViolationKind kind;
  int route = -1;
  int visit = -1;
  std::string message;
};

std::string to_string(ViolationKind kind);

// Checks coverage, capacity and timing. Routes without a schedule are
// checked for the existence of any feasible window assignment. Empty result
// means feasible.
std::vector<Violation> validate_solution(const Instance& instance, const Solution& solution,
                                         double tolerance = 1e-6);

}  // namespace vrpmtw
