#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vrpmtw {

// One benchmark line: an instance solved `reps` times. m is the route
// count of the best run. The aggregate row has instance "ALL", sums m,
// best and avg, and carries no per-run costs.
struct BenchRow {
  std::string instance;
  int b = 0;
  double time_limit = 0;
  int reps = 0;
  int m = 0;
  double best = 0;
  double avg = 0;
  std::vector<double> costs;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

BenchRow summarise_runs(std::string instance, int b, double time_limit, const std::vector<double>& costs,
                        const std::vector<int>& routes);
BenchRow aggregate_rows(const std::vector<BenchRow>& rows);

// Columns: instance,b,time_limit,reps,m,best,avg,costs with costs joined
// by ';'. Numbers are written so that they read back exactly.
std::string write_bench_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_bench_csv(std::string_view text);

}  // namespace vrpmtw
