#pragma once

#include <string>
#include <string_view>

#include "vrpmtw/solution.h"

namespace vrpmtw {

// JSON document:
//   {"format": "vrpmtw-solution", "version": 1, "instance": ..., "minimise_time": ...,
//    "seed": ..., "wall_time": ...,
//    "cost": {"distance", "time", "vehicles", "penalty", "total"},
//    "routes": [{"visits": [...], "schedule": [{"visit", "window", "start"}, ...]}, ...],
//    "unassigned": [...]}
// "schedule" is present on every route or on none.
std::string write_solution(const Solution& solution);

// Throws InputError on malformed documents.
Solution parse_solution(std::string_view text);

Solution load_solution(const std::string& path);

}  // namespace vrpmtw
