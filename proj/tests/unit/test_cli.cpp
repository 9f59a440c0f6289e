#include <doctest.h>

#include <random>

#include "vrpmtw/bench.h"
#include "vrpmtw/instance_io.h"

using namespace vrpmtw;

TEST_SUITE("bench") {
  TEST_CASE("single run has best equal to average") {
    const auto row = summarise_runs("rm101", 0, 60, {2968.8}, {9});
    CHECK(row.best == row.avg);
    CHECK(row.m == 9);
    CHECK(row.reps == 1);
  }

  TEST_CASE("best run supplies the route count") {
    const auto row = summarise_runs("x", 1, 600, {12, 10, 11}, {4, 3, 5});
    CHECK(row.best == 10);
    CHECK(row.avg == 11);
    CHECK(row.m == 3);
    CHECK_THROWS_AS(summarise_runs("x", 1, 1, {}, {}), std::invalid_argument);
  }

  TEST_CASE("aggregate row sums the instances") {
    const std::vector<BenchRow> rows{summarise_runs("a", 0, 60, {10, 20}, {2, 3}),
                                     summarise_runs("b", 0, 60, {5}, {1})};
    const auto all = aggregate_rows(rows);
    CHECK(all.instance == "ALL");
    CHECK(all.best == 15);
    CHECK(all.avg == 20);
    CHECK(all.m == 3);
    CHECK(all.costs.empty());
  }

  TEST_CASE("report parses back losslessly") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> cost(100, 20000);
    std::vector<BenchRow> rows;
    for (int i = 0; i < 20; ++i) {
      std::vector<double> costs;
      std::vector<int> routes;
      for (int k = 0; k <= i % 10; ++k) {
        costs.push_back(cost(rng));
        routes.push_back(1 + k);
      }
      rows.push_back(summarise_runs("inst" + std::to_string(i), i % 2, i % 3 == 0 ? 60 : 0.5, costs, routes));
    }
    rows.push_back(aggregate_rows(rows));
    const auto text = write_bench_csv(rows);
    CHECK(parse_bench_csv(text) == rows);
    CHECK(write_bench_csv(parse_bench_csv(text)) == text);
  }

  TEST_CASE("malformed reports are rejected") {
    CHECK_THROWS_AS(parse_bench_csv(""), InputError);
    CHECK_THROWS_AS(parse_bench_csv("a,b\n"), InputError);
    CHECK_THROWS_AS(parse_bench_csv("instance,b,time_limit,reps,m,best,avg,costs\nx,0,60,1,2,3\n"), InputError);
    CHECK_THROWS_AS(parse_bench_csv("instance,b,time_limit,reps,m,best,avg,costs\nx,0,60,1,2,abc,3,\n"), InputError);
    CHECK_THROWS_AS(write_bench_csv({BenchRow{"a,b", 0, 1, 1, 1, 1, 1, {1}}}), std::invalid_argument);
  }
}
