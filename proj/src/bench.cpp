#include "vrpmtw/bench.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "vrpmtw/instance_io.h"
#include "vrpmtw/text.h"

namespace vrpmtw {

BenchRow summarise_runs(std::string instance, int b, double time_limit, const std::vector<double>& costs,
                        const std::vector<int>& routes) {
  if (costs.empty() || costs.size() != routes.size()) {
    throw std::invalid_argument("benchmark needs one cost and route count per run");
  }
  BenchRow row{std::move(instance), b, time_limit, static_cast<int>(costs.size()), 0, 0, 0, costs};
  const auto best = std::min_element(costs.begin(), costs.end()) - costs.begin();
  row.best = costs[static_cast<std::size_t>(best)];
  row.m = routes[static_cast<std::size_t>(best)];
  double sum = 0;
  for (const double c : costs) {
    sum += c;
  }
  row.avg = sum / static_cast<double>(costs.size());
  return row;
}

BenchRow aggregate_rows(const std::vector<BenchRow>& rows) {
  BenchRow all{"ALL", 0, 0, 0, 0, 0, 0, {}};
  for (const auto& row : rows) {
    all.b = row.b;
    all.time_limit = row.time_limit;
    all.reps = row.reps;
    all.m += row.m;
    all.best += row.best;
    all.avg += row.avg;
  }
  return all;
}

std::string write_bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "instance,b,time_limit,reps,m,best,avg,costs\n";
  for (const auto& row : rows) {
    if (row.instance.find_first_of(",\n\"") != std::string::npos) {
      throw std::invalid_argument("instance name '" + row.instance + "' cannot be written to CSV");
    }
    std::vector<std::string> costs;
    for (const double c : row.costs) {
      costs.push_back(format_number(c));
    }
    out << row.instance << ',' << row.b << ',' << format_number(row.time_limit) << ',' << row.reps << ',' << row.m
        << ',' << format_number(row.best) << ',' << format_number(row.avg) << ',' << join(costs, ";") << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, separator)) {
    parts.push_back(part);
  }
  if (!text.empty() && text.back() == separator) {
    parts.emplace_back();
  }
  return parts;
}

double to_double(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size()) {
      return value;
    }
  } catch (const std::exception&) {
  }
  throw InputError(line, "bad number '" + text + "'");
}

int to_int(const std::string& text, std::size_t line) {
  const double value = to_double(text, line);
  if (value != static_cast<int>(value)) {
    throw InputError(line, "bad integer '" + text + "'");
  }
  return static_cast<int>(value);
}

}  // namespace

std::vector<BenchRow> parse_bench_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  std::vector<BenchRow> rows;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (number == 1) {
      if (line != "instance,b,time_limit,reps,m,best,avg,costs") {
        throw InputError(number, "unexpected benchmark header");
      }
      continue;
    }
    if (line.empty()) {
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 8) {
      throw InputError(number, "expected 8 columns");
    }
    BenchRow row{fields[0], to_int(fields[1], number), to_double(fields[2], number), to_int(fields[3], number),
                 to_int(fields[4], number), to_double(fields[5], number), to_double(fields[6], number), {}};
    if (!fields[7].empty()) {
      for (const auto& c : split(fields[7], ';')) {
        row.costs.push_back(to_double(c, number));
      }
    }
    rows.push_back(std::move(row));
  }
  if (number == 0) {
    throw InputError("empty benchmark report");
  }
  return rows;
}

}  // namespace vrpmtw
