#include "vrpmtw/generate.h"

#include <algorithm>
#include <random>
#include <string>

namespace vrpmtw {

Instance generate_instance(const GeneratorShape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, shape.side);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> demand(1, static_cast<int>(shape.max_demand));

  Instance inst;
  inst.name = "synthetic-" + std::to_string(shape.visits) + "-" + std::to_string(shape.windows) + "-" + std::to_string(seed);
  inst.capacity = shape.capacity;
  inst.vehicle_cost = shape.capacity;
  inst.minimise_time = shape.minimise_time;
  inst.precision = -1;
  inst.nodes.push_back({0, shape.side / 2, shape.side / 2, 0, 0, {{0, shape.horizon}}});
  for (int i = 1; i <= shape.visits; ++i) {
    inst.nodes.push_back({i, coord(rng), coord(rng), static_cast<double>(demand(rng)), shape.service, {}});
  }
  compute_euclidean_travel(inst);

  for (int i = 1; i <= shape.visits; ++i) {
    auto& visit = inst.nodes[static_cast<std::size_t>(i)];
    const Time first = inst.travel(0, static_cast<std::size_t>(i));
    const Time last = shape.horizon - shape.service - inst.travel(static_cast<std::size_t>(i), 0);
    const Time segment = (last - first) / shape.windows;
    for (int w = 0; w < shape.windows; ++w) {
      const Time from = first + segment * w;
      // Leave a gap at the segment end so consecutive windows stay disjoint.
      const Time room = std::max(0.0, segment - 1.0);
      const Time width = std::min(room, shape.min_width + unit(rng) * (shape.max_width - shape.min_width));
      const Time lower = from + unit(rng) * (room - width);
      visit.windows.push_back({lower, lower + width});
    }
  }
  return inst;
}

}  // namespace vrpmtw
