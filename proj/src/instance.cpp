#include "vrpmtw/instance.h"

#include <cmath>
#include <string>

namespace vrpmtw {

void compute_euclidean_travel(Instance& instance) {
  const auto n = instance.num_nodes();
  instance.travel = Matrix(n);
  const double scale = instance.precision >= 0 ? std::pow(10.0, instance.precision) : 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      const double dx = instance.nodes[i].x - instance.nodes[j].x;
      const double dy = instance.nodes[i].y - instance.nodes[j].y;
      double d = std::sqrt(dx * dx + dy * dy);
      if (instance.precision >= 0) {
        d = std::round(d * scale) / scale;
      }
      instance.travel(i, j) = d;
    }
  }
  instance.arc_cost = instance.travel;
}

bool windows_well_formed(const std::vector<TimeWindow>& windows) {
  if (windows.empty()) {
    return false;
  }
  for (std::size_t p = 0; p < windows.size(); ++p) {
    if (!(windows[p].lower <= windows[p].upper)) {
      return false;
    }
    if (p > 0 && !(windows[p - 1].upper < windows[p].lower)) {
      return false;
    }
  }
  return true;
}

void check_instance(const Instance& instance) {
  const auto n = instance.num_nodes();
  if (n == 0) {
    throw std::invalid_argument("instance has no depot");
  }
  if (instance.nodes.front().windows.size() != 1) {
    throw std::invalid_argument("depot must have exactly one window");
  }
  if (instance.travel.size() != n || instance.arc_cost.size() != n) {
    throw std::invalid_argument("travel/cost matrix size does not match node count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = instance.nodes[i];
    if (!windows_well_formed(v.windows)) {
      throw std::invalid_argument("node " + std::to_string(i) + ": windows unsorted or overlapping");
    }
    if (v.demand < 0) {
      throw std::invalid_argument("node " + std::to_string(i) + ": negative demand");
    }
    if (v.service < 0) {
      throw std::invalid_argument("node " + std::to_string(i) + ": negative service time");
    }
    if (instance.travel(i, i) != 0) {
      throw std::invalid_argument("nonzero travel time on the diagonal");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (instance.travel(i, j) < 0 || instance.arc_cost(i, j) < 0) {
        throw std::invalid_argument("negative travel time or arc cost");
      }
    }
  }
  if (instance.capacity < 0) {
    throw std::invalid_argument("negative vehicle capacity");
  }
}

double route_load(const Instance& instance, std::span<const int> route) {
  double load = 0;
  for (const int v : route) {
    load += instance.nodes[v].demand;
  }
  return load;
}

}  // namespace vrpmtw
