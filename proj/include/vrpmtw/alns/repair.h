#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "vrpmtw/alns/destroy.h"
#include "vrpmtw/alns/route_model.h"

namespace vrpmtw::alns {

// Best insertion of each visit into each route, computed on demand and
// dropped for a route whenever that route changes.
class InsertionCache {
 public:
  void reset(std::size_t nodes, std::size_t routes);
  const InsertionOption& get(const RouteModel& model, const std::vector<Route>& routes, std::size_t route, int visit);
  // Insertion into a new, empty route; never invalidated.
  const InsertionOption& fresh(const RouteModel& model, int visit);
  void invalidate(std::size_t route);
  void add_route();

  std::uint64_t hits = 0;
  std::uint64_t misses = 0;

 private:
  struct Entry {
    bool valid = false;
    InsertionOption option;
  };
  std::size_t nodes_ = 0;
  std::vector<std::vector<Entry>> by_route_;
  std::vector<Entry> fresh_;
  Route empty_;
  bool empty_ready_ = false;
};

struct RepairOptions {
  // Maximum number of nonempty routes after the repair.
  std::size_t route_limit = std::numeric_limits<std::size_t>::max();
  // Charged, on top of the insertion cost, for opening a route.
  double route_cost = 0;
  // Each evaluated cost is multiplied by U[1, 1 + noise] for ranking and
  // route choice; 0 gives plain regret-2.
  double noise = 0;
};

// Regret-2 insertion of `unassigned` into `routes`. Visits that fit nowhere
// stay in `unassigned`. Empty routes are dropped first.
void repair_regret(const RouteModel& model, std::vector<Route>& routes, std::vector<int>& unassigned,
                   const RepairOptions& options, InsertionCache& cache, Rng& rng);

// Visits in random order, each placed at its cheapest position over all
// routes that can take it, or in a new route otherwise. Visits that cannot
// even be served alone are returned in `unassigned`.
void greedy_construct(const RouteModel& model, std::vector<Route>& routes, std::vector<int>& unassigned,
                      double route_cost, Rng& rng);

}  // namespace vrpmtw::alns
