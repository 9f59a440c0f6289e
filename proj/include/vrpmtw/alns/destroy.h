#pragma once

#include <functional>
#include <random>
#include <vector>

#include "vrpmtw/instance.h"

namespace vrpmtw::alns {

using Rng = std::mt19937_64;

// Position floor(r^4 * n) in a list of n candidates, clamped to n - 1, for r
// uniform in [0, 1]: strongly biased toward the front of the list.
std::size_t power_law_index(double r, std::size_t n);

// Best objective value seen among solutions containing each directed edge;
// +inf for edges never seen. Node 0 is the depot.
class EdgeHistory {
 public:
  EdgeHistory() = default;
  explicit EdgeHistory(std::size_t nodes) : nodes_(nodes), best_(nodes * nodes, kInfinity) {}

  double best(int from, int to) const { return best_[static_cast<std::size_t>(from) * nodes_ + static_cast<std::size_t>(to)]; }
  // Score of a visit between `pre` and `suc`: best costs of its two edges.
  double score(int pre, int v, int suc) const { return best(pre, v) + best(v, suc); }
  void record(const std::vector<std::vector<int>>& routes, double cost);

 private:
  std::size_t nodes_ = 0;
  std::vector<double> best_;
};

// Read-only view of the solution being destroyed.
struct DestroyContext {
  const Instance* instance = nullptr;
  const std::vector<std::vector<int>>* routes = nullptr;
  // Service start per node; used by destroy_time.
  const std::vector<Time>* start_times = nullptr;
  const EdgeHistory* history = nullptr;
  // Called with (picked index, list length) for every power-law pick.
  std::function<void(std::size_t, std::size_t)> observe;
};

// Each returns the removed visits in removal order. Apart from the cluster
// operators (which may overshoot by up to `successors`), exactly
// min(q, assigned) visits are removed.
std::vector<int> destroy_random(const DestroyContext& context, std::size_t q, Rng& rng);
std::vector<int> destroy_cluster(const DestroyContext& context, std::size_t q, int successors, Rng& rng);
std::vector<int> destroy_geometric(const DestroyContext& context, std::size_t q, Rng& rng);
std::vector<int> destroy_time(const DestroyContext& context, std::size_t q, Rng& rng);
std::vector<int> destroy_history(const DestroyContext& context, std::size_t q, Rng& rng);

// Dispatch by operator name (see destroy_operator_names).
std::vector<int> destroy_by_name(const std::string& name, const DestroyContext& context, std::size_t q, Rng& rng);

}  // namespace vrpmtw::alns
