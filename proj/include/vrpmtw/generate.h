#pragma once

#include <cstdint>

#include "vrpmtw/instance.h"

namespace vrpmtw {

struct GeneratorShape {
  int visits = 100;
  int windows = 3;
  double side = 100;     // coordinates uniform in [0, side]^2, depot at the centre
  Time horizon = 1000;
  Time service = 10;
  double capacity = 200;
  double max_demand = 30;
  Time min_width = 20;
  Time max_width = 60;
  bool minimise_time = false;
};

// Random instance in the extended Solomon style. Every visit has exactly
// `windows` disjoint windows, each reachable by a direct depot round trip,
// so every visit can be served on its own. Unrounded Euclidean travel.
Instance generate_instance(const GeneratorShape& shape, std::uint64_t seed);

}  // namespace vrpmtw
