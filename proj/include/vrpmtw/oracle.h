#pragma once

// Brute-force evaluators used as ground truth in tests. Nothing here is
// fast; everything here is simple.

#include <span>
#include <vector>

#include "vrpmtw/instance.h"

namespace vrpmtw::oracle {

// Upper bound on enumerated window assignments; beyond it the oracles throw
// std::length_error.
inline constexpr std::size_t kMaxAssignments = 1'000'000;

struct AssignmentSchedule {
  bool feasible = false;
  std::vector<int> window_choice;
  Time route_start = 0;
  Time duration = kInfinity;
  std::vector<Time> service_starts;
};

// Minimal route duration over every window assignment. For a fixed
// assignment, forward propagation from the depot departure s gives an end
// time that is piecewise linear in s with slope 0 or 1, so the duration is
// minimised at a breakpoint: the horizon opening, a window bound minus the
// cumulative driving to it, or the closing time minus the full driving.
// `fixed` optionally pins a window per stop (-1 = free).
AssignmentSchedule min_duration(const Instance& instance, std::span<const int> route,
                                std::span<const int> fixed = {});

// Second, unrelated method for integer data: tries every integer departure
// time in the horizon and serves each stop as early as possible.
Time min_duration_by_departure_sweep(const Instance& instance, std::span<const int> route);

// Per extended position: the earliest service start over all assignments
// of the prefix (+inf if unreachable) and the latest service start from
// which some assignment of the suffix still returns in time (-inf if none).
std::vector<Time> earliest_starts(const Instance& instance, std::span<const int> route);
std::vector<Time> latest_starts(const Instance& instance, std::span<const int> route);

// Any assignment serves the whole route within the horizon.
bool route_feasible(const Instance& instance, std::span<const int> route, std::span<const int> fixed = {});

std::vector<int> with_insertion(std::span<const int> route, std::size_t after, int visit);

// Objective contribution of one route (vehicle cost excluded): arc costs
// plus, when minimising time, service and waiting time. +inf if infeasible.
double route_cost(const Instance& instance, std::span<const int> route, bool minimise_time);

struct Insertion {
  bool feasible = false;
  double cost = kInfinity;
};

// Materialises the insertion after extended position `after` and compares
// full route costs.
Insertion cheapest_insertion(const Instance& instance, std::span<const int> route, std::size_t after, int visit,
                             bool minimise_time);

// Per window of `visit`: is the route still feasible with the visit
// inserted and served in that window.
std::vector<bool> insertion_feasible_per_window(const Instance& instance, std::span<const int> route,
                                                std::size_t after, int visit);

// Optimal objective (arcs, time term if requested, vehicle cost per route,
// capacity respected) by enumerating every ordered route over every subset
// of visits and combining disjoint subsets. Only for a handful of visits.
struct Optimum {
  bool feasible = false;
  double cost = kInfinity;
  std::vector<std::vector<int>> routes;
};

Optimum exhaustive_optimum(const Instance& instance);

}  // namespace vrpmtw::oracle
