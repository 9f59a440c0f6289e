#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vrpmtw/instance.h"
#include "vrpmtw/slack.h"
#include "vrpmtw/solution.h"

namespace vrpmtw {

// Summary of one way of driving the route prefix up to a position. Serving
// the position at time y >= es lets the route start at st + min(y - es, bs):
// the prefix slides later one-for-one until an upstream window closes.
struct BackwardLabel {
  Time es = 0;
  Time bs = 0;
  Time st = 0;
  int parent = -1;  // index into the previous position's label set
  int window = -1;  // window used at this position; -1 at depots

  Time latest_start() const { return st + bs; }
  friend bool operator==(const BackwardLabel&, const BackwardLabel&) = default;
};

// Summary of one way of driving the route suffix from a position. Serving
// the position at time y <= ls ends the route at et - min(ls - y, fs).
struct ForwardLabel {
  Time ls = 0;
  Time fs = 0;
  Time et = 0;
  int parent = -1;  // index into the next position's label set
  int window = -1;

  Time earliest_end() const { return et - fs; }
  friend bool operator==(const ForwardLabel&, const ForwardLabel&) = default;
};

// Extends `from` (at the predecessor, whose service time is `service_from`)
// into `window` at the next stop. Empty when the window closes before the
// vehicle can arrive.
std::optional<BackwardLabel> expand_backward(const BackwardLabel& from, Time service_from, Time travel,
                                             const TimeWindow& window);

// Extends `from` (at the successor) back into `window` at a stop with
// service time `service_here`. Empty when the window opens too late.
std::optional<ForwardLabel> expand_forward(const ForwardLabel& from, Time service_here, Time travel,
                                           const TimeWindow& window);

// a is at least as good as b for every service time at the position.
bool dominates(const BackwardLabel& a, const BackwardLabel& b);
bool dominates(const ForwardLabel& a, const ForwardLabel& b);

// Adds `label` to a Pareto front kept sorted (backward: es ascending,
// forward: ls descending). Returns false when an existing label dominates
// it; equal labels are kept once.
bool add_to_front(std::vector<BackwardLabel>& front, const BackwardLabel& label);
bool add_to_front(std::vector<ForwardLabel>& front, const ForwardLabel& label);

enum class Pruning { dominance, none };

struct LabelOptions {
  Pruning pruning = Pruning::dominance;
  // Optional window index per route visit; -1 (or an empty span) leaves
  // every window of that visit open.
  std::span<const int> fixed_windows = {};
};

// Label sets per extended position (see node_at).
struct RouteLabels {
  std::vector<std::vector<BackwardLabel>> backward;
  std::vector<std::vector<ForwardLabel>> forward;

  bool feasible() const { return !backward.empty() && !backward.back().empty(); }
  // Minimal route duration over all window assignments and start times;
  // +inf when infeasible.
  Time min_duration() const;

  friend bool operator==(const RouteLabels&, const RouteLabels&) = default;
};

RouteLabels build_labels(const Instance& instance, std::span<const int> route, const LabelOptions& options = {});

// Incremental rebuild, same position conventions as refresh_slacks.
void refresh_labels(RouteLabels& labels, const Instance& instance, std::span<const int> route,
                    std::size_t backward_from, std::size_t forward_from, std::ptrdiff_t shift,
                    const LabelOptions& options = {});

struct InsertionEstimate {
  bool feasible = false;
  // Objective change with time minimisation: arc costs plus service and
  // waiting time, i.e. duration change + arc-cost change - travel change.
  double cost = kInfinity;
  double duration_delta = kInfinity;
  double travel_delta = 0;
  double arc_delta = 0;
  int window = -1;
};

// Cheapest way to serve `visit` between extended positions `after` and
// `after + 1`, over every window of the visit and every label pair.
InsertionEstimate cheapest_insertion_b1(const Instance& instance, std::span<const int> route,
                                        const RouteLabels& labels, std::size_t after, int visit,
                                        Time old_duration);

struct RouteSchedule {
  bool feasible = false;
  Time duration = kInfinity;
  Time start = 0;
  std::vector<ScheduledStop> stops;
};

// Minimal duration and a witness schedule read off already built labels.
RouteSchedule schedule_from_labels(const Instance& instance, std::span<const int> route, const RouteLabels& labels);

RouteSchedule min_route_duration(const Instance& instance, std::span<const int> route,
                                 const LabelOptions& options = {});

// Sum of travel times along the route including both depot legs.
Time route_travel(const Instance& instance, std::span<const int> route);
double route_arc_cost(const Instance& instance, std::span<const int> route);

}  // namespace vrpmtw
