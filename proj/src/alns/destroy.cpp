#include "vrpmtw/alns/destroy.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vrpmtw::alns {

std::size_t power_law_index(double r, std::size_t n) {
  const double r2 = r * r;
  const auto index = static_cast<std::size_t>(std::floor(r2 * r2 * static_cast<double>(n)));
  return std::min(index, n - 1);
}

void EdgeHistory::record(const std::vector<std::vector<int>>& routes, double cost) {
  auto note = [&](int from, int to) {
    double& slot = best_[static_cast<std::size_t>(from) * nodes_ + static_cast<std::size_t>(to)];
    slot = std::min(slot, cost);
  };
  for (const auto& route : routes) {
    if (route.empty()) {
      continue;
    }
    int prev = 0;
    for (const int v : route) {
      note(prev, v);
      prev = v;
    }
    note(prev, 0);
  }
}

namespace {

// Assigned visits with their route and position, plus removal flags.
class Remaining {
 public:
  explicit Remaining(const DestroyContext& context) : routes_(*context.routes) {
    const std::size_t nodes = context.instance->num_nodes();
    removed_.assign(nodes, 0);
    route_of_.assign(nodes, -1);
    position_.assign(nodes, 0);
    for (std::size_t r = 0; r < routes_.size(); ++r) {
      for (std::size_t k = 0; k < routes_[r].size(); ++k) {
        const int v = routes_[r][k];
        route_of_[static_cast<std::size_t>(v)] = static_cast<int>(r);
        position_[static_cast<std::size_t>(v)] = k;
        visits_.push_back(v);
      }
    }
    left_ = visits_.size();
  }

  std::size_t left() const { return left_; }
  bool removed(int v) const { return removed_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& taken() const { return taken_; }

  void take(int v) {
    removed_[static_cast<std::size_t>(v)] = 1;
    taken_.push_back(v);
    --left_;
  }

  // Remaining visits in solution order.
  std::vector<int> alive() const {
    std::vector<int> out;
    out.reserve(left_);
    for (const int v : visits_) {
      if (!removed(v)) {
        out.push_back(v);
      }
    }
    return out;
  }

  // Nearest remaining neighbours in the route; the depot (0) at the ends.
  int before(int v) const {
    const auto& route = routes_[static_cast<std::size_t>(route_of_[static_cast<std::size_t>(v)])];
    for (std::size_t k = position_[static_cast<std::size_t>(v)]; k-- > 0;) {
      if (!removed(route[k])) {
        return route[k];
      }
    }
    return 0;
  }
  int after(int v) const {
    const auto& route = routes_[static_cast<std::size_t>(route_of_[static_cast<std::size_t>(v)])];
    for (std::size_t k = position_[static_cast<std::size_t>(v)] + 1; k < route.size(); ++k) {
      if (!removed(route[k])) {
        return route[k];
      }
    }
    return 0;
  }

 private:
  const std::vector<std::vector<int>>& routes_;
  std::vector<int> visits_;
  std::vector<char> removed_;
  std::vector<int> route_of_;
  std::vector<std::size_t> position_;
  std::vector<int> taken_;
  std::size_t left_ = 0;
};

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

// Repeatedly sorts the remaining visits by key(v) ascending (stable in
// solution order) and removes the power-law-chosen one.
template <class Key>
void power_law_removal(const DestroyContext& context, Remaining& state, std::size_t q, Rng& rng, Key key) {
  while (state.taken().size() < q && state.left() > 0) {
    auto candidates = state.alive();
    std::vector<double> keys(candidates.size());
    const auto anchor = key.anchor(state, rng);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      keys[i] = key(state, anchor, candidates[i]);
    }
    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    const std::size_t index = power_law_index(uniform01(rng), candidates.size());
    if (context.observe) {
      context.observe(index, candidates.size());
    }
    state.take(candidates[order[index]]);
  }
}

// Keys relative to a removed visit chosen at random each step.
struct Relatedness {
  std::function<double(int, int)> gap;

  int anchor(const Remaining& state, Rng& rng) const {
    const auto& taken = state.taken();
    return taken[pick(rng, taken.size())];
  }
  double operator()(const Remaining&, int anchor, int v) const { return gap(anchor, v); }
};

std::vector<int> related_removal(const DestroyContext& context, std::size_t q, Rng& rng,
                                 std::function<double(int, int)> gap) {
  Remaining state(context);
  q = std::min(q, state.left());
  if (q == 0) {
    return {};
  }
  const auto alive = state.alive();
  state.take(alive[pick(rng, alive.size())]);
  power_law_removal(context, state, q, rng, Relatedness{std::move(gap)});
  return state.taken();
}

}  // namespace

std::vector<int> destroy_random(const DestroyContext& context, std::size_t q, Rng& rng) {
  Remaining state(context);
  auto alive = state.alive();
  q = std::min(q, alive.size());
  for (std::size_t i = 0; i < q; ++i) {
    std::swap(alive[i], alive[i + pick(rng, alive.size() - i)]);
  }
  alive.resize(q);
  return alive;
}

std::vector<int> destroy_cluster(const DestroyContext& context, std::size_t q, int successors, Rng& rng) {
  Remaining state(context);
  q = std::min(q, state.left());
  while (state.taken().size() < q) {
    const auto alive = state.alive();
    const int seed = alive[pick(rng, alive.size())];
    int next = state.after(seed);
    state.take(seed);
    for (int s = 0; s < successors && next != 0; ++s) {
      const int following = state.after(next);
      state.take(next);
      next = following;
    }
  }
  return state.taken();
}

std::vector<int> destroy_geometric(const DestroyContext& context, std::size_t q, Rng& rng) {
  const auto& travel = context.instance->travel;
  return related_removal(context, q, rng, [&](int a, int v) { return travel(a, v); });
}

std::vector<int> destroy_time(const DestroyContext& context, std::size_t q, Rng& rng) {
  const auto& start = *context.start_times;
  return related_removal(context, q, rng, [&](int a, int v) {
    return std::abs(start[static_cast<std::size_t>(v)] - start[static_cast<std::size_t>(a)]);
  });
}

namespace {

// Highest score first, where the score of a visit is the best cost seen
// with its incoming edge plus with its outgoing edge.
struct HistoryKey {
  const EdgeHistory* history;

  int anchor(const Remaining&, Rng&) const { return 0; }
  double operator()(const Remaining& state, int, int v) const {
    return -history->score(state.before(v), v, state.after(v));
  }
};

}  // namespace

std::vector<int> destroy_history(const DestroyContext& context, std::size_t q, Rng& rng) {
  Remaining state(context);
  q = std::min(q, state.left());
  power_law_removal(context, state, q, rng, HistoryKey{context.history});
  return state.taken();
}

std::vector<int> destroy_by_name(const std::string& name, const DestroyContext& context, std::size_t q, Rng& rng) {
  if (name == "random") return destroy_random(context, q, rng);
  if (name == "cluster1") return destroy_cluster(context, q, 1, rng);
  if (name == "cluster2") return destroy_cluster(context, q, 2, rng);
  if (name == "cluster4") return destroy_cluster(context, q, 4, rng);
  if (name == "geometric") return destroy_geometric(context, q, rng);
  if (name == "time") return destroy_time(context, q, rng);
  if (name == "history") return destroy_history(context, q, rng);
  throw std::invalid_argument("unknown destroy operator '" + name + "'");
}

}  // namespace vrpmtw::alns
