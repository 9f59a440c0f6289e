#include "vrpmtw/labels.h"

#include <algorithm>

namespace vrpmtw {

std::optional<BackwardLabel> expand_backward(const BackwardLabel& from, Time service_from, Time travel,
                                             const TimeWindow& window) {
  const Time ready = from.es + service_from + travel;
  if (ready > window.upper) {
    return std::nullopt;
  }
  // Waiting for the window to open is absorbed by starting the route later,
  // up to the prefix's slack; any remainder is real waiting here.
  const Time wait = std::max(0.0, window.lower - ready);
  const Time shifted = std::min(wait, from.bs);
  BackwardLabel label;
  label.es = std::max(ready, window.lower);
  label.st = from.st + shifted;
  // Sliding further is also bounded by this window closing.
  label.bs = std::min(from.bs - shifted, window.upper - label.es);
  return label;
}

std::optional<ForwardLabel> expand_forward(const ForwardLabel& from, Time service_here, Time travel,
                                           const TimeWindow& window) {
  const Time latest = from.ls - travel - service_here;
  if (latest < window.lower) {
    return std::nullopt;
  }
  // Closing before `latest` pulls the suffix earlier, which shortens the
  // end time only while the suffix has slack left. This mirrors the
  // backward rule: et drops by exactly the slack consumed.
  const Time gap = std::max(0.0, latest - window.upper);
  const Time shifted = std::min(gap, from.fs);
  ForwardLabel label;
  label.ls = std::min(latest, window.upper);
  label.et = from.et - shifted;
  label.fs = std::min(from.fs - shifted, label.ls - window.lower);
  return label;
}

bool dominates(const BackwardLabel& a, const BackwardLabel& b) {
  return a.latest_start() >= b.latest_start() && a.es <= b.es;
}

bool dominates(const ForwardLabel& a, const ForwardLabel& b) {
  return a.earliest_end() <= b.earliest_end() && a.ls >= b.ls;
}

namespace {

template <class Label, class Before>
bool add_pareto(std::vector<Label>& front, const Label& label, Before before) {
  for (const auto& existing : front) {
    if (dominates(existing, label)) {
      return false;
    }
  }
  std::erase_if(front, [&](const Label& existing) { return dominates(label, existing); });
  const auto at = std::upper_bound(front.begin(), front.end(), label, before);
  front.insert(at, label);
  return true;
}

bool es_before(const BackwardLabel& a, const BackwardLabel& b) { return a.es < b.es; }
bool ls_before(const ForwardLabel& a, const ForwardLabel& b) { return a.ls > b.ls; }

template <class Label, class Before>
void add_label(std::vector<Label>& set, const Label& label, Pruning pruning, Before before) {
  if (pruning == Pruning::dominance) {
    add_pareto(set, label, before);
  } else {
    set.insert(std::upper_bound(set.begin(), set.end(), label, before), label);
  }
}

TimeWindow depot_window(const Instance& instance) {
  return {instance.route_open(), instance.route_close()};
}

// Calls f(window_index, window) for each window allowed at extended position k.
template <class F>
void for_each_window(const Instance& instance, std::span<const int> route, const LabelOptions& options,
                     std::size_t k, F&& f) {
  const int node = node_at(route, k);
  if (node == 0) {
    f(-1, depot_window(instance));
    return;
  }
  const auto& windows = instance.windows(node);
  const int fixed = options.fixed_windows.empty() ? -1 : options.fixed_windows[k - 1];
  if (fixed >= 0) {
    f(fixed, windows[fixed]);
    return;
  }
  for (std::size_t p = 0; p < windows.size(); ++p) {
    f(static_cast<int>(p), windows[p]);
  }
}

void backward_pass(RouteLabels& labels, const Instance& instance, std::span<const int> route,
                   std::size_t from, const LabelOptions& options) {
  const std::size_t last = route.size() + 1;
  if (from == 0) {
    const Time open = instance.route_open();
    labels.backward[0] = {BackwardLabel{open, instance.route_close() - open, open, -1, -1}};
    from = 1;
  }
  for (std::size_t k = from; k <= last; ++k) {
    auto& set = labels.backward[k];
    set.clear();
    const int prev = node_at(route, k - 1);
    const int node = node_at(route, k);
    const Time service = instance.service(prev);
    const Time travel = instance.travel(prev, node);
    const auto& before = labels.backward[k - 1];
    for (std::size_t i = 0; i < before.size(); ++i) {
      for_each_window(instance, route, options, k, [&](int p, const TimeWindow& w) {
        if (auto label = expand_backward(before[i], service, travel, w)) {
          label->parent = static_cast<int>(i);
          label->window = p;
          add_label(set, *label, options.pruning, es_before);
        }
      });
    }
  }
}

void forward_pass(RouteLabels& labels, const Instance& instance, std::span<const int> route,
                  std::size_t below, const LabelOptions& options) {
  const std::size_t last = route.size() + 1;
  std::size_t k = below;
  if (below > last) {
    const Time close = instance.route_close();
    labels.forward[last] = {ForwardLabel{close, close - instance.route_open(), close, -1, -1}};
    k = last;
  }
  while (k-- > 0) {
    auto& set = labels.forward[k];
    set.clear();
    const int node = node_at(route, k);
    const int next = node_at(route, k + 1);
    const Time service = instance.service(node);
    const Time travel = instance.travel(node, next);
    const auto& after = labels.forward[k + 1];
    for (std::size_t i = 0; i < after.size(); ++i) {
      for_each_window(instance, route, options, k, [&](int p, const TimeWindow& w) {
        if (auto label = expand_forward(after[i], service, travel, w)) {
          label->parent = static_cast<int>(i);
          label->window = p;
          add_label(set, *label, options.pruning, ls_before);
        }
      });
    }
  }
}

}  // namespace

bool add_to_front(std::vector<BackwardLabel>& front, const BackwardLabel& label) {
  return add_pareto(front, label, es_before);
}

bool add_to_front(std::vector<ForwardLabel>& front, const ForwardLabel& label) {
  return add_pareto(front, label, ls_before);
}

Time RouteLabels::min_duration() const {
  Time best = kInfinity;
  if (backward.empty()) {
    return best;
  }
  for (const auto& label : backward.back()) {
    best = std::min(best, label.es - label.st);
  }
  return best;
}

RouteLabels build_labels(const Instance& instance, std::span<const int> route, const LabelOptions& options) {
  RouteLabels labels;
  labels.backward.resize(route.size() + 2);
  labels.forward.resize(route.size() + 2);
  backward_pass(labels, instance, route, 0, options);
  forward_pass(labels, instance, route, route.size() + 2, options);
  return labels;
}

void refresh_labels(RouteLabels& labels, const Instance& instance, std::span<const int> route,
                    std::size_t backward_from, std::size_t forward_from, std::ptrdiff_t shift,
                    const LabelOptions& options) {
  const std::size_t size = route.size() + 2;
  std::vector<std::vector<ForwardLabel>> forward(size);
  for (std::size_t p = forward_from; p < size; ++p) {
    forward[p] = std::move(labels.forward[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(p) - shift)]);
  }
  labels.forward = std::move(forward);
  labels.backward.resize(size);
  backward_pass(labels, instance, route, std::min(backward_from, size - 1), options);
  forward_pass(labels, instance, route, std::min(forward_from, size + 1), options);
}

InsertionEstimate cheapest_insertion_b1(const Instance& instance, std::span<const int> route,
                                        const RouteLabels& labels, std::size_t after, int visit,
                                        Time old_duration) {
  const int prev = node_at(route, after);
  const int next = node_at(route, after + 1);
  const Time service_prev = instance.service(prev);
  const Time service_visit = instance.service(visit);
  const Time to_visit = instance.travel(prev, visit);
  const Time from_visit = instance.travel(visit, next);
  const auto& windows = instance.windows(visit);
  const auto& before = labels.backward[after];
  const auto& following = labels.forward[after + 1];

  InsertionEstimate result;
  result.travel_delta = to_visit + from_visit - instance.travel(prev, next);
  result.arc_delta = instance.arc_cost(prev, visit) + instance.arc_cost(visit, next) - instance.arc_cost(prev, next);
  if (following.empty()) {
    return result;
  }

  Time best = kInfinity;
  // before: es ascending, following: ls descending. Once the earliest
  // ready time misses the latest admissible start, later labels miss too.
  for (const auto& b : before) {
    const Time ready = b.es + service_prev + to_visit;
    if (ready > following.front().ls - from_visit - service_visit) {
      break;
    }
    for (const auto& f : following) {
      const Time latest = f.ls - from_visit - service_visit;
      if (ready > latest) {
        break;
      }
      for (std::size_t p = 0; p < windows.size(); ++p) {
        const auto& w = windows[p];
        if (w.lower > latest) {
          break;
        }
        if (ready > w.upper) {
          continue;
        }
        const auto into = expand_backward(b, service_prev, to_visit, w);
        const auto out = expand_forward(f, service_visit, from_visit, w);
        if (!into || !out || into->es > out->ls) {
          continue;
        }
        // Both halves slide toward each other to close the gap at the
        // inserted visit, limited by their combined slack.
        const Time duration = out->et - into->st - std::min(out->ls - into->es, into->bs + out->fs);
        if (duration < best) {
          best = duration;
          result.window = static_cast<int>(p);
        }
      }
    }
  }
  if (best == kInfinity) {
    return result;
  }
  result.feasible = true;
  result.duration_delta = best - old_duration;
  result.cost = result.duration_delta + result.arc_delta - result.travel_delta;
  return result;
}

RouteSchedule schedule_from_labels(const Instance& instance, std::span<const int> route, const RouteLabels& labels) {
  RouteSchedule schedule;
  if (!labels.feasible()) {
    return schedule;
  }
  const auto& end = labels.backward.back();
  std::size_t best = 0;
  for (std::size_t i = 1; i < end.size(); ++i) {
    if (end[i].es - end[i].st < end[best].es - end[best].st) {
      best = i;
    }
  }
  schedule.feasible = true;
  schedule.duration = end[best].es - end[best].st;
  schedule.start = end[best].st;

  std::vector<int> chosen(route.size(), 0);
  int index = end[best].parent;
  for (std::size_t k = route.size(); k >= 1; --k) {
    const auto& label = labels.backward[k][static_cast<std::size_t>(index)];
    chosen[k - 1] = label.window;
    index = label.parent;
  }

  Time at = schedule.start;
  int prev = 0;
  for (std::size_t k = 0; k < route.size(); ++k) {
    const int v = route[k];
    const auto& w = instance.windows(v)[static_cast<std::size_t>(chosen[k])];
    at = std::max(at + instance.service(prev) + instance.travel(prev, v), w.lower);
    schedule.stops.push_back({v, chosen[k], at});
    prev = v;
  }
  return schedule;
}

RouteSchedule min_route_duration(const Instance& instance, std::span<const int> route, const LabelOptions& options) {
  return schedule_from_labels(instance, route, build_labels(instance, route, options));
}

Time route_travel(const Instance& instance, std::span<const int> route) {
  Time total = 0;
  int prev = 0;
  for (const int v : route) {
    total += instance.travel(prev, v);
    prev = v;
  }
  return total + instance.travel(prev, 0);
}

double route_arc_cost(const Instance& instance, std::span<const int> route) {
  double total = 0;
  int prev = 0;
  for (const int v : route) {
    total += instance.arc_cost(prev, v);
    prev = v;
  }
  return total + instance.arc_cost(prev, 0);
}

}  // namespace vrpmtw
