#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vrpmtw/alns/adaptive.h"
#include "vrpmtw/alns/config.h"
#include "vrpmtw/instance.h"
#include "vrpmtw/solution.h"

namespace vrpmtw::alns {

struct TraceRow {
  double seconds = 0;
  long long iteration = 0;
  std::string phase;
  double current_cost = 0;
  double best_cost = 0;
  std::size_t routes = 0;
  std::size_t unassigned = 0;
  double temperature = 0;
};

struct WeightSnapshot {
  long long iteration = 0;
  std::vector<double> destroy;
  std::vector<double> repair;
};

struct OperatorStats {
  std::string name;
  long long uses = 0;
  double weight = 0;
};

struct SearchStats {
  long long tuning_iterations = 0;
  long long route_min_iterations = 0;
  long long optimise_iterations = 0;
  long long rejected = 0;
  long long accepted = 0;
  long long improved = 0;
  long long new_best = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
  double greedy_cost = 0;
  double cost_init = 0;
  Temperature temperature;
  std::size_t greedy_routes = 0;
  std::vector<int> unservable;
  std::vector<OperatorStats> destroy;
  std::vector<OperatorStats> repair;
  std::vector<WeightSnapshot> weights;
  std::vector<TraceRow> trace;
  double seconds = 0;

  long long iterations() const { return route_min_iterations + optimise_iterations; }
};

struct SearchResult {
  Solution solution;
  SearchStats stats;
};

// Greedy construction, temperature tuning, route minimisation and
// optimisation. The returned solution is the cheapest feasible one seen;
// visits that cannot be served at all are listed as unassigned. Throws
// std::logic_error if that solution fails validation.
SearchResult run(const Instance& instance, const SearchConfig& config);

// Independent searches, one per seed, on up to `jobs` threads. Results are
// in seed order.
std::vector<SearchResult> run_many(const Instance& instance, const SearchConfig& config,
                                   const std::vector<std::uint64_t>& seeds, int jobs);

// Index of the cheapest validator-clean result.
std::size_t best_result(const Instance& instance, const std::vector<SearchResult>& results);

// CSV with header seconds,iteration,phase,current_cost,best_cost,routes,unassigned,temperature.
std::string trace_to_csv(const std::vector<TraceRow>& trace);
std::string stats_to_json(const SearchStats& stats);

}  // namespace vrpmtw::alns
