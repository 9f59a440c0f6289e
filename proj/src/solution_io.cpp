#include "vrpmtw/solution_io.h"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vrpmtw/instance_io.h"

namespace vrpmtw {

using nlohmann::json;

std::string write_solution(const Solution& solution) {
  json doc;
  doc["format"] = "vrpmtw-solution";
  doc["version"] = 1;
  doc["instance"] = solution.instance_name;
  doc["minimise_time"] = solution.minimise_time;
  doc["seed"] = solution.seed;
  doc["wall_time"] = solution.wall_time;
  doc["cost"] = {{"distance", solution.cost.distance},
                 {"time", solution.cost.time_term},
                 {"vehicles", solution.cost.vehicle_term},
                 {"penalty", solution.cost.penalty_term},
                 {"total", solution.cost.total()}};
  json routes = json::array();
  for (std::size_t r = 0; r < solution.routes.size(); ++r) {
    json route;
    route["visits"] = solution.routes[r];
    if (!solution.schedules.empty()) {
      json stops = json::array();
      for (const auto& stop : solution.schedules[r]) {
        stops.push_back({{"visit", stop.visit}, {"window", stop.window}, {"start", stop.service_start}});
      }
      route["schedule"] = std::move(stops);
    }
    routes.push_back(std::move(route));
  }
  doc["routes"] = std::move(routes);
  doc["unassigned"] = solution.unassigned;
  return doc.dump(2) + "\n";
}

Solution parse_solution(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed solution document: ") + e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != "vrpmtw-solution") {
      throw InputError("not a vrpmtw solution document");
    }
    if (doc.at("version").get<int>() != 1) {
      throw InputError("unsupported solution version");
    }
    Solution solution;
    solution.instance_name = doc.value("instance", "");
    solution.minimise_time = doc.value("minimise_time", false);
    solution.seed = doc.value("seed", std::uint64_t{0});
    solution.wall_time = doc.value("wall_time", 0.0);
    const auto& cost = doc.at("cost");
    solution.cost.distance = cost.at("distance").get<double>();
    solution.cost.time_term = cost.at("time").get<double>();
    solution.cost.vehicle_term = cost.at("vehicles").get<double>();
    solution.cost.penalty_term = cost.at("penalty").get<double>();

    const auto& routes = doc.at("routes");
    bool any_schedule = false;
    bool all_schedules = true;
    for (const auto& route : routes) {
      solution.routes.push_back(route.at("visits").get<std::vector<int>>());
      const bool has = route.contains("schedule");
      any_schedule = any_schedule || has;
      all_schedules = all_schedules && has;
    }
    if (any_schedule && !all_schedules) {
      throw InputError("either every route or no route must carry a schedule");
    }
    if (any_schedule) {
      for (const auto& route : routes) {
        std::vector<ScheduledStop> stops;
        for (const auto& stop : route.at("schedule")) {
          stops.push_back({stop.at("visit").get<int>(), stop.at("window").get<int>(),
                           stop.at("start").get<double>()});
        }
        solution.schedules.push_back(std::move(stops));
      }
    }
    solution.unassigned = doc.at("unassigned").get<std::vector<int>>();
    return solution;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed solution document: ") + e.what());
  }
}

Solution load_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open solution file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_solution(buffer.str());
}

}  // namespace vrpmtw
