#include "vrpmtw/alns/repair.h"

#include <algorithm>
#include <numeric>

namespace vrpmtw::alns {

void InsertionCache::reset(std::size_t nodes, std::size_t routes) {
  nodes_ = nodes;
  by_route_.assign(routes, std::vector<Entry>(nodes));
  if (fresh_.size() != nodes) {
    fresh_.assign(nodes, Entry{});
  }
}

const InsertionOption& InsertionCache::get(const RouteModel& model, const std::vector<Route>& routes,
                                           std::size_t route, int visit) {
  auto& entry = by_route_[route][static_cast<std::size_t>(visit)];
  if (entry.valid) {
    ++hits;
  } else {
    ++misses;
    entry.option = model.best_insertion(routes[route], visit);
    entry.valid = true;
  }
  return entry.option;
}

const InsertionOption& InsertionCache::fresh(const RouteModel& model, int visit) {
  if (!empty_ready_) {
    empty_ = model.make_route({});
    empty_ready_ = true;
  }
  auto& entry = fresh_[static_cast<std::size_t>(visit)];
  if (entry.valid) {
    ++hits;
  } else {
    ++misses;
    entry.option = model.best_insertion(empty_, visit);
    entry.valid = true;
  }
  return entry.option;
}

void InsertionCache::invalidate(std::size_t route) {
  for (auto& entry : by_route_[route]) {
    entry.valid = false;
  }
}

void InsertionCache::add_route() { by_route_.emplace_back(nodes_); }

namespace {

std::size_t used(const std::vector<Route>& routes) {
  return static_cast<std::size_t>(std::count_if(routes.begin(), routes.end(), [](const Route& r) { return !r.empty(); }));
}

}  // namespace

void repair_regret(const RouteModel& model, std::vector<Route>& routes, std::vector<int>& unassigned,
                   const RepairOptions& options, InsertionCache& cache, Rng& rng) {
  std::erase_if(routes, [](const Route& r) { return r.empty(); });
  const Instance& inst = model.instance();
  cache.reset(inst.num_nodes(), routes.size());
  std::uniform_real_distribution<double> noise(1.0, 1.0 + options.noise);
  auto perturb = [&](double cost) { return options.noise > 0 ? cost * noise(rng) : cost; };

  std::vector<int> pending = std::move(unassigned);
  unassigned.clear();
  while (!pending.empty()) {
    std::size_t chosen = pending.size();
    std::size_t chosen_route = 0;
    double chosen_regret = -kInfinity;
    double chosen_best = kInfinity;
    const bool can_open = used(routes) < options.route_limit;

    for (std::size_t i = 0; i < pending.size(); ++i) {
      const int v = pending[i];
      double best = kInfinity;
      double second = kInfinity;
      std::size_t best_route = 0;
      auto consider = [&](double cost, std::size_t route) {
        if (cost < best) {
          second = best;
          best = cost;
          best_route = route;
        } else if (cost < second) {
          second = cost;
        }
      };
      for (std::size_t r = 0; r < routes.size(); ++r) {
        if (!model.fits(routes[r], v)) {
          continue;
        }
        const auto& option = cache.get(model, routes, r, v);
        if (option.feasible) {
          consider(perturb(option.cost), r);
        }
      }
      if (can_open && inst.nodes[static_cast<std::size_t>(v)].demand <= inst.capacity) {
        const auto& option = cache.fresh(model, v);
        if (option.feasible) {
          consider(perturb(option.cost + options.route_cost), routes.size());
        }
      }
      if (best == kInfinity) {
        continue;
      }
      if (second > chosen_regret || (second == chosen_regret && best < chosen_best)) {
        chosen = i;
        chosen_route = best_route;
        chosen_regret = second;
        chosen_best = best;
      }
    }
    if (chosen == pending.size()) {
      break;
    }

    const int v = pending[chosen];
    InsertionOption option;
    if (chosen_route == routes.size()) {
      option = cache.fresh(model, v);
      routes.push_back(model.make_route({}));
      cache.add_route();
    } else {
      option = cache.get(model, routes, chosen_route, v);
    }
    model.insert(routes[chosen_route], option, v);
    cache.invalidate(chosen_route);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(chosen));
  }
  unassigned = std::move(pending);
}

void greedy_construct(const RouteModel& model, std::vector<Route>& routes, std::vector<int>& unassigned,
                      double route_cost, Rng& rng) {
  const Instance& inst = model.instance();
  std::vector<int> order(inst.num_visits());
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  const Route empty = model.make_route({});
  for (const int v : order) {
    InsertionOption best;
    std::size_t best_route = routes.size();
    for (std::size_t r = 0; r < routes.size(); ++r) {
      if (!model.fits(routes[r], v)) {
        continue;
      }
      const auto option = model.best_insertion(routes[r], v);
      if (option.feasible && option.cost < best.cost) {
        best = option;
        best_route = r;
      }
    }
    if (!best.feasible) {
      const auto option = model.best_insertion(empty, v);
      if (!option.feasible || !model.fits(empty, v)) {
        unassigned.push_back(v);
        continue;
      }
      best = option;
      best.cost += route_cost;
      routes.push_back(empty);
    }
    model.insert(routes[best_route], best, v);
  }
}

}  // namespace vrpmtw::alns
