#pragma once

#include <string>
#include <vector>

#include "vrpmtw/alns/config.h"
#include "vrpmtw/alns/destroy.h"

namespace vrpmtw::alns {

enum class Outcome { rejected, accepted, improved, best };

// Roulette selection over named operators with exponentially smoothed
// weights. Disabled operators keep weight 0 and are never picked.
class OperatorBank {
 public:
  OperatorBank(std::vector<std::string> names, const std::set<std::string>& disabled = {});

  std::size_t select(Rng& rng);
  void update(std::size_t op, Outcome outcome, const Params& params);

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<long long>& uses() const { return uses_; }
  bool enabled(std::size_t op) const { return enabled_[op]; }

 private:
  std::vector<std::string> names_;
  std::vector<double> weights_;
  std::vector<char> enabled_;
  std::vector<long long> uses_;
};

double outcome_score(Outcome outcome, const Params& params);

// Acceptance temperatures, negative by convention. A worsening of dcost on
// a solution of cost c is accepted with probability exp(dcost / c * tau).
struct Temperature {
  double start = -1;
  double end = -1;

  // The temperature at which a worsening of `dcost` on a solution of cost
  // `cost` is accepted half of the time.
  static double for_half_acceptance(double cost, double dcost);
  static Temperature tuned(double cost_init, const Params& params);

  // Geometric interpolation; `fraction` in [0, 1].
  double at(double fraction) const;
};

bool accept(double candidate_cost, double current_cost, double tau, Rng& rng);
// Same rule with the worsening scaled by an explicit reference cost.
bool accept_delta(double delta, double reference_cost, double tau, Rng& rng);

// Unassigned visits tolerated in route minimisation when `elapsed` of the
// budget (a fraction in [0, 1]) has passed.
int route_min_threshold(double elapsed);

}  // namespace vrpmtw::alns
