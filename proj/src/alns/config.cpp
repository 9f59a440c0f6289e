#include "vrpmtw/alns/config.h"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>

namespace vrpmtw::alns {

Params params_preset(const std::string& name) {
  if (name == "b0") {
    return {5000, 300.00, 2.33, 4, 15, 17, 0.75};
  }
  if (name == "b1") {
    return {1600, 26.00, 5.50, 2, 8, 16, 0.83};
  }
  if (name == "default") {
    return {1000, 10.0, 3.0, 2, 4, 10, 0.9};
  }
  throw std::invalid_argument("unknown parameter preset '" + name + "' (expected b0, b1 or default)");
}

Params params_for(bool minimise_time) { return params_preset(minimise_time ? "b1" : "b0"); }

namespace {

template <class T>
void read(const nlohmann::json& j, const char* key, T& field) {
  if (j.contains(key)) {
    field = j.at(key).get<T>();
  }
}

}  // namespace

Params params_from_json(const std::string& text, Params base) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("parameter file is not JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("parameter file must hold a JSON object");
  }
  static const std::vector<std::string> known{"tuning_iterations", "dcost_init",    "dcost_end", "score_accepted",
                                              "score_improved",    "score_best",    "decay"};
  for (const auto& item : j.items()) {
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      throw std::invalid_argument("unknown parameter '" + item.key() + "'");
    }
  }
  try {
    read(j, "tuning_iterations", base.tuning_iterations);
    read(j, "dcost_init", base.dcost_init);
    read(j, "dcost_end", base.dcost_end);
    read(j, "score_accepted", base.score_accepted);
    read(j, "score_improved", base.score_improved);
    read(j, "score_best", base.score_best);
    read(j, "decay", base.decay);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad parameter value: ") + e.what());
  }
  if (base.decay < 0 || base.decay > 1) {
    throw std::invalid_argument("decay must lie in [0, 1]");
  }
  if (base.tuning_iterations < 0) {
    throw std::invalid_argument("tuning_iterations must be nonnegative");
  }
  return base;
}

std::string params_to_json(const Params& p) {
  nlohmann::json j{{"tuning_iterations", p.tuning_iterations},
                   {"dcost_init", p.dcost_init},
                   {"dcost_end", p.dcost_end},
                   {"score_accepted", p.score_accepted},
                   {"score_improved", p.score_improved},
                   {"score_best", p.score_best},
                   {"decay", p.decay}};
  return j.dump(2);
}

void disable_component(SearchConfig& config, const std::string& name) {
  if (name == "tuning") {
    config.temperature_tuning = false;
    return;
  }
  if (name == "route-minimisation") {
    config.route_minimisation = false;
    return;
  }
  if (name == "implicit-time-windows") {
    config.window_mode = WindowMode::fixed;
    return;
  }
  const auto& destroy = destroy_operator_names();
  const auto& repair = repair_operator_names();
  const bool is_destroy = std::find(destroy.begin(), destroy.end(), name) != destroy.end();
  const bool is_repair = std::find(repair.begin(), repair.end(), name) != repair.end();
  if (!is_destroy && !is_repair) {
    throw std::invalid_argument("unknown component '" + name + "'");
  }
  config.disabled_operators.insert(name);
  const auto& group = is_destroy ? destroy : repair;
  const bool any_left = std::any_of(group.begin(), group.end(),
                                    [&](const std::string& n) { return !config.disabled_operators.count(n); });
  if (!any_left) {
    throw std::invalid_argument(std::string("at least one ") + (is_destroy ? "destroy" : "repair") +
                                " operator must stay enabled");
  }
}

}  // namespace vrpmtw::alns
