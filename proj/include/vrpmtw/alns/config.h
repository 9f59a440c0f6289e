#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vrpmtw::alns {

// Tuned parameters. Scores are the weight targets for an accepted,
// improving and new-best outcome; a rejected outcome scores 1.
struct Params {
  int tuning_iterations = 1000;
  double dcost_init = 10.0;
  double dcost_end = 3.0;
  double score_accepted = 2;
  double score_improved = 4;
  double score_best = 10;
  double decay = 0.9;

  friend bool operator==(const Params&, const Params&) = default;
};

// "b0" (distance only), "b1" (time minimisation) or "default". Throws
// std::invalid_argument for unknown names.
Params params_preset(const std::string& name);

// Preset matching the objective variant.
Params params_for(bool minimise_time);

// Reads a JSON object with any subset of the Params fields (same names);
// missing fields keep the values of `base`.
Params params_from_json(const std::string& text, Params base);
std::string params_to_json(const Params& params);

inline const std::vector<std::string>& destroy_operator_names() {
  static const std::vector<std::string> names{"random", "cluster1", "cluster2", "cluster4",
                                              "geometric", "time", "history"};
  return names;
}

inline const std::vector<std::string>& repair_operator_names() {
  static const std::vector<std::string> names{"regret2", "regret2_random"};
  return names;
}

enum class WindowMode {
  implicit,  // any window, chosen optimally on every evaluation
  fixed,     // window picked when a visit is inserted and kept until it is removed
};

struct SearchConfig {
  Params params;
  int removal_min = 10;
  int removal_max = 40;
  double penalty_unassigned = 10000;
  double penalty_route = 1000000;
  double time_limit = 60;
  // When set, the main loop runs exactly this many iterations and nothing
  // depends on the clock.
  std::optional<long long> iterations;
  double route_min_fraction = 0.10;
  std::uint64_t seed = 1;
  // Overrides the instance's objective flag when set.
  std::optional<bool> minimise_time;

  std::set<std::string> disabled_operators;
  bool temperature_tuning = true;
  bool route_minimisation = true;
  // Used when tuning is disabled; otherwise derived from the greedy cost.
  std::optional<double> tau_start;
  std::optional<double> tau_end;
  WindowMode window_mode = WindowMode::implicit;

  // Append a trace row every this many iterations (and on every new best).
  long long trace_every = 100;
  bool record_trace = true;
};

// Applies a component name from the command line: an operator name,
// "tuning", "route-minimisation" or "implicit-time-windows". Throws
// std::invalid_argument for unknown names or when every destroy or every
// repair operator would be disabled.
void disable_component(SearchConfig& config, const std::string& name);

}  // namespace vrpmtw::alns
