#include "vrpmtw/alns/search.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <json.hpp>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "vrpmtw/alns/destroy.h"
#include "vrpmtw/alns/repair.h"
#include "vrpmtw/alns/route_model.h"
#include "vrpmtw/text.h"

namespace vrpmtw::alns {

namespace {

using Clock = std::chrono::steady_clock;

struct State {
  std::vector<Route> routes;
  std::vector<int> unassigned;

  std::size_t used() const {
    return static_cast<std::size_t>(std::count_if(routes.begin(), routes.end(), [](const Route& r) { return !r.empty(); }));
  }
  double route_costs() const {
    double sum = 0;
    for (const auto& r : routes) {
      if (!r.empty()) {
        sum += r.cost;
      }
    }
    return sum;
  }
  std::size_t assigned() const {
    std::size_t n = 0;
    for (const auto& r : routes) {
      n += r.visits.size();
    }
    return n;
  }
  std::vector<std::vector<int>> sequences() const {
    std::vector<std::vector<int>> out;
    out.reserve(routes.size());
    for (const auto& r : routes) {
      out.push_back(r.visits);
    }
    return out;
  }
};

enum class Phase { tuning, route_min, optimise };

const char* phase_name(Phase phase) {
  switch (phase) {
    case Phase::tuning: return "tuning";
    case Phase::route_min: return "route_min";
    case Phase::optimise: return "optimise";
  }
  return "";
}

class Search {
 public:
  Search(const Instance& instance, const SearchConfig& config)
      : instance_(instance),
        config_(config),
        minimise_time_(config.minimise_time.value_or(instance.minimise_time)),
        model_(instance, minimise_time_, config.window_mode),
        rng_(config.seed),
        destroy_(destroy_operator_names(), config.disabled_operators),
        repair_(repair_operator_names(), config.disabled_operators),
        history_(instance.num_nodes()) {}

  SearchResult run();

 private:
  double cost(const State& s, double per_route) const {
    return s.route_costs() + per_route * static_cast<double>(s.used()) +
           config_.penalty_unassigned * static_cast<double>(s.unassigned.size());
  }
  double original(const State& s) const { return cost(s, instance_.vehicle_cost); }
  double phase_cost(const State& s) const {
    return cost(s, phase_ == Phase::route_min ? config_.penalty_route : instance_.vehicle_cost);
  }

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  bool timed() const { return !config_.iterations.has_value(); }

  State neighbour(const State& current, std::size_t& d, std::size_t& r);
  std::vector<Time> start_times(const State& s) const;
  void destroy_smallest(State& s) const;
  void consider_best(const State& s);
  void score(std::size_t d, std::size_t r, Outcome outcome);
  void trace(const State& current, double tau, bool force);
  Solution build(const State& s) const;

  const Instance& instance_;
  const SearchConfig& config_;
  bool minimise_time_;
  RouteModel model_;
  Rng rng_;
  OperatorBank destroy_;
  OperatorBank repair_;
  EdgeHistory history_;
  InsertionCache cache_;
  Phase phase_ = Phase::tuning;
  std::size_t route_limit_ = std::numeric_limits<std::size_t>::max();
  Clock::time_point start_;
  long long step_ = 0;

  State best_;
  double best_cost_ = kInfinity;
  bool best_changed_ = false;
  SearchStats stats_;
};

State Search::neighbour(const State& current, std::size_t& d, std::size_t& r) {
  State cand = current;
  const std::size_t assigned = cand.assigned();
  std::uniform_int_distribution<int> size(config_.removal_min, config_.removal_max);
  const std::size_t q = std::min(static_cast<std::size_t>(size(rng_)), assigned);

  d = destroy_.select(rng_);
  const auto sequences = cand.sequences();
  std::vector<Time> starts;
  if (destroy_.names()[d] == "time") {
    starts = start_times(cand);
  }
  DestroyContext context{&instance_, &sequences, &starts, &history_, {}};
  const auto removed = destroy_by_name(destroy_.names()[d], context, q, rng_);

  if (!removed.empty()) {
    std::vector<char> flags(instance_.num_nodes(), 0);
    for (const int v : removed) {
      flags[static_cast<std::size_t>(v)] = 1;
    }
    for (auto& route : cand.routes) {
      model_.remove(route, flags);
    }
    cand.unassigned.insert(cand.unassigned.end(), removed.begin(), removed.end());
  }

  r = repair_.select(rng_);
  RepairOptions options;
  options.route_limit = route_limit_;
  options.route_cost = phase_ == Phase::route_min ? config_.penalty_route : instance_.vehicle_cost;
  options.noise = repair_.names()[r] == "regret2_random" ? 0.5 : 0.0;
  repair_regret(model_, cand.routes, cand.unassigned, options, cache_, rng_);

  history_.record(cand.sequences(), original(cand));
  return cand;
}

std::vector<Time> Search::start_times(const State& s) const {
  std::vector<Time> out(instance_.num_nodes(), 0.0);
  for (const auto& route : s.routes) {
    for (const auto& stop : model_.schedule(route)) {
      out[static_cast<std::size_t>(stop.visit)] = stop.service_start;
    }
  }
  return out;
}

void Search::destroy_smallest(State& s) const {
  auto smallest = s.routes.end();
  for (auto it = s.routes.begin(); it != s.routes.end(); ++it) {
    if (!it->empty() && (smallest == s.routes.end() || it->visits.size() < smallest->visits.size())) {
      smallest = it;
    }
  }
  if (smallest == s.routes.end()) {
    return;
  }
  s.unassigned.insert(s.unassigned.end(), smallest->visits.begin(), smallest->visits.end());
  s.routes.erase(smallest);
}

void Search::consider_best(const State& s) {
  if (!s.unassigned.empty()) {
    return;
  }
  const double c = original(s);
  if (c < best_cost_) {
    best_ = s;
    best_cost_ = c;
    best_changed_ = true;
  }
}

void Search::score(std::size_t d, std::size_t r, Outcome outcome) {
  destroy_.update(d, outcome, config_.params);
  repair_.update(r, outcome, config_.params);
  switch (outcome) {
    case Outcome::rejected: ++stats_.rejected; break;
    case Outcome::accepted: ++stats_.accepted; break;
    case Outcome::improved: ++stats_.improved; break;
    case Outcome::best: ++stats_.new_best; break;
  }
}

void Search::trace(const State& current, double tau, bool force) {
  ++step_;
  const bool periodic = config_.trace_every > 0 && step_ % config_.trace_every == 0;
  if (!config_.record_trace || !(periodic || force || best_changed_)) {
    best_changed_ = false;
    return;
  }
  best_changed_ = false;
  stats_.trace.push_back({elapsed(), step_, phase_name(phase_), phase_cost(current), best_cost_, current.used(),
                          current.unassigned.size(), tau});
  if (periodic || force) {
    stats_.weights.push_back({step_, destroy_.weights(), repair_.weights()});
  }
}

Solution Search::build(const State& s) const {
  Instance effective = instance_;
  effective.minimise_time = minimise_time_;
  Solution sol;
  sol.instance_name = instance_.name;
  sol.minimise_time = minimise_time_;
  sol.seed = config_.seed;
  for (const auto& route : s.routes) {
    if (route.empty()) {
      continue;
    }
    sol.routes.push_back(route.visits);
    sol.schedules.push_back(model_.schedule(route));
  }
  sol.unassigned = stats_.unservable;
  std::sort(sol.unassigned.begin(), sol.unassigned.end());
  sol.cost = evaluate_objective(effective, sol);
  sol.cost.penalty_term = config_.penalty_unassigned * static_cast<double>(sol.unassigned.size());
  for (const auto& violation : validate_solution(effective, sol)) {
    if (violation.kind != ViolationKind::unassigned_visit) {
      throw std::logic_error("search produced an invalid solution: " + violation.message);
    }
  }
  return sol;
}

SearchResult Search::run() {
  start_ = Clock::now();
  const double budget = config_.time_limit;

  State current;
  greedy_construct(model_, current.routes, stats_.unservable, instance_.vehicle_cost, rng_);
  stats_.greedy_cost = original(current);
  stats_.greedy_routes = current.used();
  consider_best(current);

  if (config_.temperature_tuning) {
    phase_ = Phase::tuning;
    double tuning_best = original(current);
    for (int i = 0; i < config_.params.tuning_iterations; ++i) {
      if (current.assigned() == 0 || (timed() && elapsed() >= 0.5 * budget)) {
        break;
      }
      std::size_t d = 0;
      std::size_t r = 0;
      State cand = neighbour(current, d, r);
      const double c = original(cand);
      Outcome outcome = Outcome::rejected;
      if (cand.unassigned.empty() && c < original(current)) {
        outcome = c < tuning_best ? Outcome::best : Outcome::improved;
        tuning_best = std::min(tuning_best, c);
        current = std::move(cand);
        consider_best(current);
      }
      score(d, r, outcome);
      ++stats_.tuning_iterations;
      trace(current, 0.0, false);
    }
  }
  stats_.cost_init = original(current);
  stats_.temperature = Temperature::tuned(stats_.cost_init, config_.params);
  if (config_.tau_start) {
    stats_.temperature.start = *config_.tau_start;
  }
  if (config_.tau_end) {
    stats_.temperature.end = *config_.tau_end;
  }
  const Temperature& temperature = stats_.temperature;

  State best_feasible = current;
  if (config_.route_minimisation && current.used() > 1) {
    phase_ = Phase::route_min;
    destroy_smallest(current);
    route_limit_ = current.used();
  } else {
    phase_ = Phase::optimise;
  }
  double phase_best = phase_cost(current);

  const auto main_start = elapsed();
  auto fraction = [&](long long it) {
    if (!timed()) {
      return *config_.iterations > 0 ? static_cast<double>(it) / static_cast<double>(*config_.iterations) : 1.0;
    }
    const double span = budget - main_start;
    return span > 0 ? (elapsed() - main_start) / span : 1.0;
  };
  auto enter_optimise = [&] {
    phase_ = Phase::optimise;
    route_limit_ = std::numeric_limits<std::size_t>::max();
    phase_best = phase_cost(current);
  };

  for (long long it = 0;; ++it) {
    if (timed() ? elapsed() >= budget : it >= *config_.iterations) {
      break;
    }
    if (current.assigned() == 0 && current.unassigned.empty()) {
      break;
    }
    const double f = fraction(it);
    const double tau = temperature.at(f);

    std::size_t d = 0;
    std::size_t r = 0;
    State cand = neighbour(current, d, r);
    Outcome outcome = Outcome::rejected;
    if (phase_ == Phase::route_min || cand.unassigned.empty()) {
      const double c = phase_cost(cand);
      const double now = phase_cost(current);
      const double reference = phase_ == Phase::route_min ? cost(current, instance_.vehicle_cost) : now;
      if (accept_delta(c - now, reference, tau, rng_)) {
        outcome = c < phase_best ? Outcome::best : (c < now ? Outcome::improved : Outcome::accepted);
        phase_best = std::min(phase_best, c);
        current = std::move(cand);
      }
    }
    score(d, r, outcome);
    consider_best(current);

    if (phase_ == Phase::route_min) {
      ++stats_.route_min_iterations;
      const bool complete = current.unassigned.empty();
      if (complete && (current.used() < best_feasible.used() ||
                       (current.used() == best_feasible.used() && original(current) < original(best_feasible)))) {
        best_feasible = current;
      }
      if (f >= config_.route_min_fraction && complete) {
        enter_optimise();
      } else if (f >= config_.route_min_fraction &&
                 static_cast<int>(current.unassigned.size()) > route_min_threshold(f)) {
        current = best_feasible;
        enter_optimise();
      } else if (complete) {
        if (current.used() <= 1) {
          enter_optimise();
        } else {
          destroy_smallest(current);
          route_limit_ = current.used();
          phase_best = phase_cost(current);
        }
      }
    } else {
      ++stats_.optimise_iterations;
    }
    trace(current, tau, false);
  }
  trace(current, temperature.at(1.0), true);

  stats_.cache_hits = cache_.hits;
  stats_.cache_misses = cache_.misses;
  for (std::size_t i = 0; i < destroy_.names().size(); ++i) {
    stats_.destroy.push_back({destroy_.names()[i], destroy_.uses()[i], destroy_.weights()[i]});
  }
  for (std::size_t i = 0; i < repair_.names().size(); ++i) {
    stats_.repair.push_back({repair_.names()[i], repair_.uses()[i], repair_.weights()[i]});
  }

  SearchResult result;
  result.solution = build(best_);
  stats_.seconds = elapsed();
  result.solution.wall_time = stats_.seconds;
  result.stats = std::move(stats_);
  return result;
}

}  // namespace

SearchResult run(const Instance& instance, const SearchConfig& config) {
  Search search(instance, config);
  return search.run();
}

std::vector<SearchResult> run_many(const Instance& instance, const SearchConfig& config,
                                   const std::vector<std::uint64_t>& seeds, int jobs) {
  std::vector<SearchResult> results(seeds.size());
  std::vector<std::exception_ptr> errors(seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      try {
        SearchConfig local = config;
        local.seed = seeds[i];
        results[i] = run(instance, local);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::clamp<long long>(jobs, 1, static_cast<long long>(seeds.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& thread : pool) {
      thread.join();
    }
  }
  for (const auto& error : errors) {
    if (error) {
      std::rethrow_exception(error);
    }
  }
  return results;
}

std::size_t best_result(const Instance& instance, const std::vector<SearchResult>& results) {
  std::size_t best = results.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& sol = results[i].solution;
    Instance effective = instance;
    effective.minimise_time = sol.minimise_time;
    bool clean = true;
    for (const auto& violation : validate_solution(effective, sol)) {
      clean = clean && violation.kind == ViolationKind::unassigned_visit;
    }
    if (!clean) {
      continue;
    }
    if (best == results.size() || sol.cost.total() < results[best].solution.cost.total()) {
      best = i;
    }
  }
  if (best == results.size()) {
    throw std::runtime_error("no valid result");
  }
  return best;
}

std::string trace_to_csv(const std::vector<TraceRow>& trace) {
  std::ostringstream out;
  out << "seconds,iteration,phase,current_cost,best_cost,routes,unassigned,temperature\n";
  for (const auto& row : trace) {
    out << format_number(row.seconds) << ',' << row.iteration << ',' << row.phase << ','
        << format_number(row.current_cost) << ',' << format_number(row.best_cost) << ',' << row.routes << ','
        << row.unassigned << ',' << format_number(row.temperature) << '\n';
  }
  return out.str();
}

std::string stats_to_json(const SearchStats& stats) {
  nlohmann::json j;
  j["phases"] = {{"tuning", stats.tuning_iterations},
                 {"route_min", stats.route_min_iterations},
                 {"optimise", stats.optimise_iterations}};
  j["outcomes"] = {{"rejected", stats.rejected},
                   {"accepted", stats.accepted},
                   {"improved", stats.improved},
                   {"new_best", stats.new_best}};
  j["cache"] = {{"hits", stats.cache_hits}, {"misses", stats.cache_misses}};
  j["greedy_cost"] = stats.greedy_cost;
  j["greedy_routes"] = stats.greedy_routes;
  j["cost_init"] = stats.cost_init;
  j["temperature"] = {{"start", stats.temperature.start}, {"end", stats.temperature.end}};
  j["unservable"] = stats.unservable;
  j["seconds"] = stats.seconds;
  auto operators = [](const std::vector<OperatorStats>& ops) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& op : ops) {
      out.push_back({{"name", op.name}, {"uses", op.uses}, {"weight", op.weight}});
    }
    return out;
  };
  j["destroy"] = operators(stats.destroy);
  j["repair"] = operators(stats.repair);
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& w : stats.weights) {
    weights.push_back({{"iteration", w.iteration}, {"destroy", w.destroy}, {"repair", w.repair}});
  }
  j["weights"] = weights;
  return j.dump(2);
}

}  // namespace vrpmtw::alns
