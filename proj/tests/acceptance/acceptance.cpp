// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "random_cases.h"
#include "vrpmtw/alns/adaptive.h"
#include "vrpmtw/alns/destroy.h"
#include "vrpmtw/alns/repair.h"
#include "vrpmtw/alns/search.h"
#include "vrpmtw/generate.h"
#include "vrpmtw/instance_io.h"
#include "vrpmtw/labels.h"
#include "vrpmtw/oracle.h"
#include "vrpmtw/slack.h"

using namespace vrpmtw;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fixed(double value, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << value;
  return out.str();
}

int failures = 0;

void report(int number, const std::string& name, const std::function<Outcome()>& check) {
  const auto start = Clock::now();
  Outcome outcome;
  try {
    outcome = check();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  failures += outcome.pass ? 0 : 1;
  std::printf("[%s] %d %s: %s (%.1f s)\n", outcome.pass ? "PASS" : "FAIL", number, name.c_str(),
              outcome.detail.c_str(), seconds);
  std::fflush(stdout);
}

constexpr double kTolerance = 1e-9;

bool close(double a, double b) {
  if (a == b) {
    return true;
  }
  return std::abs(a - b) <= kTolerance * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// Same corpus for criteria 1 and 2.
std::vector<testing::RouteCase> route_corpus(int count) {
  std::mt19937_64 rng(20240601);
  std::vector<testing::RouteCase> cases;
  for (int i = 0; i < count; ++i) {
    testing::RouteCaseShape shape;
    shape.max_route = 10;
    shape.max_windows = 3;
    shape.separate_costs = i % 2 == 1;
    cases.push_back(testing::random_route_case(rng, shape));
  }
  return cases;
}

Outcome oracle_equivalence(const std::vector<testing::RouteCase>& cases) {
  long long duration_mismatch = 0;
  long long insertion_mismatch = 0;
  long long insertions = 0;
  long long feasible = 0;
  for (const auto& c : cases) {
    const auto labels = build_labels(c.instance, c.route);
    const auto truth = oracle::min_duration(c.instance, c.route);
    const auto fast = min_route_duration(c.instance, c.route);
    if (fast.feasible != truth.feasible || (truth.feasible && !close(fast.duration, truth.duration))) {
      ++duration_mismatch;
    }
    const Time old = labels.min_duration();
    for (const int v : c.spare) {
      for (std::size_t after = 0; after <= c.route.size(); ++after) {
        ++insertions;
        const auto a = cheapest_insertion_b1(c.instance, c.route, labels, after, v, old);
        const auto b = oracle::cheapest_insertion(c.instance, c.route, after, v, true);
        if (a.feasible != b.feasible || (a.feasible && !close(a.cost, b.cost))) {
          ++insertion_mismatch;
        }
        feasible += a.feasible ? 1 : 0;
      }
    }
  }
  return {duration_mismatch == 0 && insertion_mismatch == 0 && feasible > 0,
          std::to_string(cases.size()) + " routes, " + std::to_string(insertions) + " insertions (" +
              std::to_string(feasible) + " feasible); mismatches: duration " + std::to_string(duration_mismatch) +
              ", insertion " + std::to_string(insertion_mismatch)};
}

Outcome pruning_soundness(const std::vector<testing::RouteCase>& cases) {
  long long mismatch = 0;
  long long compared = 0;
  for (const auto& c : cases) {
    const auto pruned = build_labels(c.instance, c.route);
    const auto full = build_labels(c.instance, c.route, {Pruning::none});
    if (pruned.feasible() != full.feasible() || (pruned.feasible() && !close(pruned.min_duration(), full.min_duration()))) {
      ++mismatch;
    }
    const Time old = pruned.min_duration();
    for (const int v : c.spare) {
      for (std::size_t after = 0; after <= c.route.size(); ++after) {
        ++compared;
        const auto a = cheapest_insertion_b1(c.instance, c.route, pruned, after, v, old);
        const auto b = cheapest_insertion_b1(c.instance, c.route, full, after, v, old);
        if (a.feasible != b.feasible || (a.feasible && !close(a.cost, b.cost))) {
          ++mismatch;
        }
      }
    }
  }
  return {mismatch == 0, std::to_string(compared) + " insertions over " + std::to_string(cases.size()) +
                             " routes; mismatches " + std::to_string(mismatch)};
}

Outcome distance_deltas() {
  std::mt19937_64 rng(777);
  long long mismatch = 0;
  long long checked = 0;
  int cases = 0;
  for (; cases < 10000; ++cases) {
    testing::RouteCaseShape shape;
    shape.separate_costs = cases % 2 == 0;
    const auto c = testing::random_route_case(rng, shape);
    const auto state = update_slacks(c.instance, c.route);
    if (state.es != oracle::earliest_starts(c.instance, c.route) ||
        state.ls != oracle::latest_starts(c.instance, c.route)) {
      ++mismatch;
    }
    const double base = oracle::route_cost(c.instance, c.route, false);
    for (const int v : c.spare) {
      for (std::size_t after = 0; after <= c.route.size(); ++after) {
        ++checked;
        const auto fast = feasible_insertion_b0(c.instance, c.route, state, after, v);
        const auto slow = oracle::insertion_feasible_per_window(c.instance, c.route, after, v);
        if (fast != slow) {
          ++mismatch;
          continue;
        }
        const auto longer = oracle::with_insertion(c.route, after, v);
        const double recomputed = oracle::route_cost(c.instance, longer, false) - base;
        const bool any = std::find(slow.begin(), slow.end(), true) != slow.end();
        if (any && !close(delta_distance(c.instance, c.route, after, v), recomputed)) {
          ++mismatch;
        }
      }
    }
  }
  return {mismatch == 0, std::to_string(cases) + " routes, " + std::to_string(checked) +
                             " insertions (feasibility per window and distance delta); mismatches " +
                             std::to_string(mismatch)};
}

Outcome small_optimality() {
  std::mt19937_64 rng(4242);
  // [mandated removal range, removal range scaled to the instance] x B
  int matched[2][2] = {{0, 0}, {0, 0}};
  int total[2] = {0, 0};
  std::string misses;
  for (int i = 0; i < 50; ++i) {
    const int n = 4 + i % 5;
    for (const bool timed : {false, true}) {
      const auto inst = testing::random_small_instance(rng, n, 2, timed);
      const auto optimum = oracle::exhaustive_optimum(inst);
      ++total[timed];
      for (const bool scaled : {false, true}) {
        alns::SearchConfig config;
        config.params = alns::params_for(timed);
        config.iterations = 600;
        config.seed = static_cast<std::uint64_t>(i + 1);
        config.minimise_time = timed;
        if (scaled) {
          config.removal_min = 1;
          config.removal_max = std::max(1, (n + 1) / 2);
        }
        const double cost = alns::run(inst, config).solution.cost.total();
        if (close(cost, optimum.cost) || cost < optimum.cost) {
          ++matched[scaled][timed];
        } else if (!scaled) {
          misses += " i" + std::to_string(i) + (timed ? "/B1" : "/B0") + "+" +
                    fixed(100 * (cost - optimum.cost) / optimum.cost, 2) + "%";
        }
      }
    }
  }
  auto rate = [&](int scaled, int timed) { return static_cast<double>(matched[scaled][timed]) / total[timed]; };
  auto counts = [&](int scaled) {
    return "B=0 " + std::to_string(matched[scaled][0]) + "/" + std::to_string(total[0]) + ", B=1 " +
           std::to_string(matched[scaled][1]) + "/" + std::to_string(total[1]);
  };
  std::string detail = counts(0) + " match the exhaustive optimum";
  if (!misses.empty()) {
    detail += "; gaps:" + misses;
  }
  detail += "; diagnostic with removal range [1, ceil(n/2)]: " + counts(1);
  return {rate(0, 0) >= 0.95 && rate(0, 1) >= 0.95, detail};
}

Outcome temperature_property() {
  std::string detail;
  bool pass = true;
  for (const bool timed : {false, true}) {
    GeneratorShape shape;
    shape.visits = 50;
    shape.minimise_time = timed;
    const auto inst = generate_instance(shape, 5);
    alns::SearchConfig config;
    config.params = alns::params_for(timed);
    config.iterations = 0;
    config.seed = 3;
    const auto stats = alns::run(inst, config).stats;
    const double cost = stats.cost_init;
    const double tau = stats.temperature.at(0.0);
    alns::Rng rng(99);
    const int trials = 100000;
    int accepted = 0;
    for (int t = 0; t < trials; ++t) {
      accepted += alns::accept(cost + config.params.dcost_init, cost, tau, rng) ? 1 : 0;
    }
    const double rate = static_cast<double>(accepted) / trials;
    pass = pass && std::abs(rate - 0.5) <= 0.01;
    detail += std::string(detail.empty() ? "" : "; ") + (timed ? "B=1" : "B=0") + " cost_init " + fixed(cost, 1) +
              ", tau_start " + fixed(tau, 3) + ", accepted " + fixed(100 * rate, 2) + "%";
  }
  return {pass, detail};
}

Outcome adaptive_property() {
  alns::Rng rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  bool floor_ok = true;
  long long updates = 0;
  // 1e6 updates in random sequences with random parameters.
  for (int sequence = 0; sequence < 1000; ++sequence) {
    alns::Params params;
    params.decay = unit(rng);
    params.score_accepted = 1 + 20 * unit(rng);
    params.score_improved = 1 + 20 * unit(rng);
    params.score_best = 1 + 20 * unit(rng);
    alns::OperatorBank bank(alns::destroy_operator_names());
    for (int k = 0; k < 1000; ++k) {
      bank.update(rng() % 7, static_cast<alns::Outcome>(rng() % 4), params);
      ++updates;
      for (const double w : bank.weights()) {
        floor_ok = floor_ok && w >= 1.0;
      }
    }
  }
  alns::Params frozen_params;
  frozen_params.decay = 1.0;
  alns::OperatorBank frozen(alns::destroy_operator_names());
  for (int k = 0; k < 100000; ++k) {
    frozen.update(frozen.select(rng), static_cast<alns::Outcome>(rng() % 4), frozen_params);
  }
  const bool constant = std::all_of(frozen.weights().begin(), frozen.weights().end(), [](double w) { return w == 1.0; });

  alns::OperatorBank bank(alns::destroy_operator_names());
  alns::Params params = alns::params_preset("default");
  for (int k = 0; k < 40; ++k) {
    bank.update(static_cast<std::size_t>(k % 3), alns::Outcome::best, params);
  }
  const auto weights = bank.weights();
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<long long> counts(weights.size(), 0);
  const int draws = 100000;
  for (int k = 0; k < draws; ++k) {
    ++counts[bank.select(rng)];
  }
  double worst_sigma = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double p = weights[i] / sum;
    const double sigma = std::sqrt(draws * p * (1 - p));
    worst_sigma = std::max(worst_sigma, std::abs(static_cast<double>(counts[i]) - draws * p) / sigma);
  }
  return {floor_ok && constant && worst_sigma <= 3.0,
          std::to_string(updates) + " updates keep weights >= 1: " + (floor_ok ? "yes" : "no") +
              "; decay=1 constant: " + (constant ? "yes" : "no") + "; selection frequencies within " +
              fixed(worst_sigma, 2) + " sigma over 1e5 draws"};
}

// Kolmogorov distribution tail.
double ks_p_value(double d, std::size_t n) {
  const double x = std::sqrt(static_cast<double>(n)) * d;
  double sum = 0;
  for (int j = 1; j <= 100; ++j) {
    sum += (j % 2 == 1 ? 2.0 : -2.0) * std::exp(-2.0 * j * j * x * x);
  }
  return std::clamp(sum, 0.0, 1.0);
}

Outcome destroy_distribution() {
  GeneratorShape shape;
  shape.visits = 100;
  const auto inst = generate_instance(shape, 11);
  const alns::RouteModel model(inst, false, alns::WindowMode::implicit);
  std::vector<alns::Route> routes;
  std::vector<int> unassigned;
  alns::Rng rng(12);
  alns::greedy_construct(model, routes, unassigned, inst.vehicle_cost, rng);
  std::vector<std::vector<int>> sequences;
  std::vector<Time> starts(inst.num_nodes(), 0.0);
  for (const auto& r : routes) {
    sequences.push_back(r.visits);
    for (std::size_t k = 0; k < r.visits.size(); ++k) {
      starts[static_cast<std::size_t>(r.visits[k])] = r.slack.es[k + 1];
    }
  }
  alns::EdgeHistory history(inst.num_nodes());
  history.record(sequences, 5000);

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::string detail;
  bool pass = true;
  for (const std::string name : {"geometric", "time", "history"}) {
    std::vector<double> pit;
    alns::DestroyContext context{&inst, &sequences, &starts, &history, {}};
    context.observe = [&](std::size_t k, std::size_t n) {
      const double lo = std::pow(static_cast<double>(k) / static_cast<double>(n), 0.25);
      const double hi = k + 1 == n ? 1.0 : std::pow(static_cast<double>(k + 1) / static_cast<double>(n), 0.25);
      pit.push_back(lo + unit(rng) * (hi - lo));
    };
    while (pit.size() < 100000) {
      alns::destroy_by_name(name, context, 40, rng);
    }
    pit.resize(100000);
    std::sort(pit.begin(), pit.end());
    double d = 0;
    const double n = static_cast<double>(pit.size());
    for (std::size_t i = 0; i < pit.size(); ++i) {
      d = std::max({d, (static_cast<double>(i) + 1) / n - pit[i], pit[i] - static_cast<double>(i) / n});
    }
    const double p = ks_p_value(d, pit.size());
    pass = pass && p > 0.01;
    detail += std::string(detail.empty() ? "" : "; ") + name + " D=" + fixed(d, 5) + " p=" + fixed(p, 3);
  }
  return {pass, detail + " (1e5 draws each)"};
}

struct Reference {
  const char* name;
  bool timed;
  double best;
  double tolerance;
};

Outcome benchmark_or_throughput() {
  if (const char* dir = std::getenv("VRPMTW_REFERENCE_DIR")) {
    const Reference references[] = {{"rm101", false, 2968.8, 0.005},
                                    {"rm205", false, 2671.0, 0.005},
                                    {"rcm101", false, 3062.0, 0.005},
                                    {"rm105", true, 3686.6, 0.010},
                                    {"cm108", true, 11984.3, 0.010}};
    bool pass = true;
    std::string detail;
    for (const auto& ref : references) {
      auto inst = load_instance((std::filesystem::path(dir) / (std::string(ref.name) + ".txt")).string());
      inst.minimise_time = ref.timed;
      alns::SearchConfig config;
      config.params = alns::params_for(ref.timed);
      config.time_limit = 60;
      config.minimise_time = ref.timed;
      config.record_trace = false;
      std::vector<std::uint64_t> seeds(10);
      std::iota(seeds.begin(), seeds.end(), 1);
      const auto results = alns::run_many(inst, config, seeds, static_cast<int>(std::thread::hardware_concurrency()));
      const double best = results[alns::best_result(inst, results)].solution.cost.total();
      const bool ok = best <= ref.best * (1 + ref.tolerance);
      pass = pass && ok;
      detail += std::string(detail.empty() ? "" : "; ") + ref.name + " " + fixed(best, 1) + " vs " +
                fixed(ref.best, 1);
    }
    return {pass, detail};
  }
  GeneratorShape shape;
  shape.visits = 100;
  shape.windows = 3;
  std::string detail = "reference instances not available (VRPMTW_REFERENCE_DIR unset); throughput on 100 visits x 3 windows, 60 s:";
  bool pass = true;
  for (const bool timed : {false, true}) {
    shape.minimise_time = timed;
    const auto inst = generate_instance(shape, 2024);
    alns::SearchConfig config;
    config.params = alns::params_for(timed);
    config.time_limit = 60;
    config.record_trace = false;
    const auto result = alns::run(inst, config);
    const long long iterations = result.stats.iterations() + result.stats.tuning_iterations;
    pass = pass && iterations >= 10000;
    detail += std::string(timed ? " B=1 " : " B=0 ") + std::to_string(iterations) + " iterations";
  }
  return {pass, detail + " (floor 10000)"};
}

Outcome ablation() {
  GeneratorShape shape;
  shape.visits = 100;
  shape.windows = 3;
  shape.minimise_time = true;
  double full = 0;
  double fixed_windows = 0;
  int worse = 0;
  const int seeds = 10;
  for (int s = 1; s <= seeds; ++s) {
    const auto inst = generate_instance(shape, static_cast<std::uint64_t>(100 + s));
    alns::SearchConfig config;
    config.params = alns::params_for(true);
    config.iterations = 10000;
    config.seed = static_cast<std::uint64_t>(s);
    config.record_trace = false;
    const double a = alns::run(inst, config).solution.cost.total();
    alns::disable_component(config, "implicit-time-windows");
    const double b = alns::run(inst, config).solution.cost.total();
    full += a / seeds;
    fixed_windows += b / seeds;
    worse += b >= a ? 1 : 0;
  }
  return {fixed_windows >= full, "average B=1 cost over 10 seeds: implicit windows " + fixed(full, 1) +
                                     ", fixed windows " + fixed(fixed_windows, 1) + " (gap " +
                                     fixed(100 * (fixed_windows - full) / full, 2) + "%, fixed worse or equal on " +
                                     std::to_string(worse) + "/10)"};
}

}  // namespace

int main() {
  const auto corpus = route_corpus(10000);
  report(1, "oracle equivalence", [&] { return oracle_equivalence(corpus); });
  report(2, "pruning soundness", [&] { return pruning_soundness(corpus); });
  report(3, "distance-only delta correctness", distance_deltas);
  report(4, "small-instance optimality", small_optimality);
  report(5, "temperature half-acceptance", temperature_property);
  report(6, "adaptive weights", adaptive_property);
  report(7, "destroy index law", destroy_distribution);
  report(8, "benchmark reproduction / throughput", benchmark_or_throughput);
  report(9, "implicit time windows ablation", ablation);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
