#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vrpmtw {

using Time = double;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct TimeWindow {
  Time lower = 0;
  Time upper = 0;

  bool contains(Time t) const { return lower <= t && t <= upper; }
  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

// A customer (or the depot, at node 0). Windows are sorted by lower bound
// and pairwise disjoint.
struct Visit {
  int id = 0;
  double x = 0;
  double y = 0;
  double demand = 0;
  Time service = 0;
  std::vector<TimeWindow> windows;

  friend bool operator==(const Visit&, const Visit&) = default;
};

// Dense row-major square matrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  std::size_t size() const { return n_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// Problem data. Node 0 is the depot (both start and end of every route);
// nodes 1..n are the visits. The depot's single window is the planning
// horizon; every route must return by min(horizon.upper, deadline).
struct Instance {
  std::string name;
  std::vector<Visit> nodes;
  Matrix travel;
  Matrix arc_cost;
  double capacity = 0;
  double vehicle_cost = 0;
  Time deadline = kInfinity;
  bool minimise_time = false;
  // Decimal digits kept in Euclidean travel times; negative means unrounded.
  int precision = -1;

  std::size_t num_nodes() const { return nodes.size(); }
  std::size_t num_visits() const { return nodes.empty() ? 0 : nodes.size() - 1; }

  const TimeWindow& horizon() const { return nodes.front().windows.front(); }
  Time route_open() const { return horizon().lower; }
  Time route_close() const { return horizon().upper < deadline ? horizon().upper : deadline; }

  Time service(int node) const { return node == 0 ? 0.0 : nodes[node].service; }
  const std::vector<TimeWindow>& windows(int node) const { return nodes[node].windows; }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Fills travel and arc_cost with (optionally rounded) Euclidean distances.
void compute_euclidean_travel(Instance& instance);

// Throws std::invalid_argument on any broken data invariant.
void check_instance(const Instance& instance);

// Window sets are sorted by lower bound and strictly separated.
bool windows_well_formed(const std::vector<TimeWindow>& windows);

// Sum of visit demands on a route.
double route_load(const Instance& instance, std::span<const int> route);

}  // namespace vrpmtw
