#include "vrpmtw/alns/adaptive.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vrpmtw::alns {

OperatorBank::OperatorBank(std::vector<std::string> names, const std::set<std::string>& disabled)
    : names_(std::move(names)), weights_(names_.size(), 1.0), enabled_(names_.size(), 1), uses_(names_.size(), 0) {
  bool any = false;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (disabled.count(names_[i])) {
      enabled_[i] = 0;
      weights_[i] = 0;
    } else {
      any = true;
    }
  }
  if (!any) {
    throw std::invalid_argument("every operator of a group is disabled");
  }
}

std::size_t OperatorBank::select(Rng& rng) {
  double total = 0;
  for (const double w : weights_) {
    total += w;
  }
  double r = std::uniform_real_distribution<double>(0.0, total)(rng);
  std::size_t chosen = names_.size();
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!enabled_[i]) {
      continue;
    }
    chosen = i;
    if (r < weights_[i]) {
      break;
    }
    r -= weights_[i];
  }
  ++uses_[chosen];
  return chosen;
}

double outcome_score(Outcome outcome, const Params& params) {
  switch (outcome) {
    case Outcome::rejected: return 1.0;
    case Outcome::accepted: return params.score_accepted;
    case Outcome::improved: return params.score_improved;
    case Outcome::best: return params.score_best;
  }
  return 1.0;
}

void OperatorBank::update(std::size_t op, Outcome outcome, const Params& params) {
  if (!enabled_[op]) {
    return;
  }
  const double w = weights_[op] * params.decay + outcome_score(outcome, params) * (1.0 - params.decay);
  weights_[op] = std::max(1.0, w);
}

double Temperature::for_half_acceptance(double cost, double dcost) {
  const double tau = std::log(0.5) * cost / dcost;
  if (!std::isfinite(tau) || tau >= 0) {
    return -1e9;
  }
  return tau;
}

Temperature Temperature::tuned(double cost_init, const Params& params) {
  return {for_half_acceptance(cost_init, params.dcost_init), for_half_acceptance(cost_init, params.dcost_end)};
}

double Temperature::at(double fraction) const {
  fraction = std::clamp(fraction, 0.0, 1.0);
  return start * std::pow(end / start, fraction);
}

bool accept(double candidate_cost, double current_cost, double tau, Rng& rng) {
  return accept_delta(candidate_cost - current_cost, current_cost, tau, rng);
}

bool accept_delta(double delta, double reference_cost, double tau, Rng& rng) {
  if (delta <= 0) {
    return true;
  }
  if (!(reference_cost > 0)) {
    return false;
  }
  const double p = std::exp(delta / reference_cost * tau);
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

int route_min_threshold(double elapsed) {
  const double percent_left = 100.0 * (1.0 - std::clamp(elapsed, 0.0, 1.0));
  const int t = static_cast<int>(std::floor(percent_left / 10.0 + 1e-9)) - 2;
  return std::clamp(t, 0, 5);
}

}  // namespace vrpmtw::alns
