#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vrpmtw/alns/config.h"
#include "vrpmtw/alns/search.h"
#include "vrpmtw/bench.h"
#include "vrpmtw/generate.h"
#include "vrpmtw/instance_io.h"
#include "vrpmtw/solution_io.h"
#include "vrpmtw/text.h"

namespace {

using namespace vrpmtw;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

// Thrown for semantically bad flag values; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchFlags {
  std::optional<int> b;
  double time_limit = 60;
  std::optional<long long> iterations;
  std::uint64_t seed = 1;
  std::string params;
  std::vector<std::string> disable;
  std::optional<double> tau_start;
  std::optional<double> tau_end;
  int jobs = 1;
};

void add_search_flags(CLI::App& cmd, SearchFlags& flags) {
  cmd.add_option("--b", flags.b, "Objective: 0 distance only, 1 with service and waiting time (default: from the instance)")
      ->check(CLI::IsMember({0, 1}));
  cmd.add_option("--time-limit", flags.time_limit, "Wall-clock budget per run in seconds")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--iterations", flags.iterations,
                 "Run exactly this many main-loop iterations instead of using the clock (deterministic)")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--seed", flags.seed, "Random seed")->capture_default_str();
  cmd.add_option("--params", flags.params,
                 "Parameter preset (b0, b1, default) or JSON file (default: b0 or b1 matching the objective)");
  cmd.add_option("--disable", flags.disable,
                 "Disable a component: an operator name, tuning, route-minimisation or implicit-time-windows "
                 "(repeatable)");
  cmd.add_option("--tau-start", flags.tau_start, "Fixed start temperature (negative)");
  cmd.add_option("--tau-end", flags.tau_end, "Fixed end temperature (negative)");
  cmd.add_option("--jobs", flags.jobs, "Concurrent runs")->capture_default_str()->check(CLI::PositiveNumber);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
}

alns::SearchConfig make_config(const SearchFlags& flags, Instance& instance) {
  if (flags.b) {
    instance.minimise_time = *flags.b == 1;
  }
  alns::SearchConfig config;
  config.minimise_time = instance.minimise_time;
  config.time_limit = flags.time_limit;
  config.iterations = flags.iterations;
  config.seed = flags.seed;
  try {
    if (flags.params.empty()) {
      config.params = alns::params_for(instance.minimise_time);
    } else if (std::filesystem::is_regular_file(flags.params)) {
      config.params = alns::params_from_json(read_file(flags.params), alns::params_for(instance.minimise_time));
    } else {
      config.params = alns::params_preset(flags.params);
    }
    for (const auto& name : flags.disable) {
      alns::disable_component(config, name);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if ((flags.tau_start && *flags.tau_start >= 0) || (flags.tau_end && *flags.tau_end >= 0)) {
    throw UsageError("temperatures must be negative");
  }
  if (!config.temperature_tuning && !(flags.tau_start && flags.tau_end)) {
    throw UsageError("--disable tuning needs --tau-start and --tau-end");
  }
  config.tau_start = flags.tau_start;
  config.tau_end = flags.tau_end;
  return config;
}

std::string summary(const Solution& sol) {
  std::ostringstream out;
  out << "cost=" << format_number(sol.cost.total()) << " routes=" << sol.used_routes()
      << " unassigned=" << sol.unassigned.size() << " time=" << format_number(sol.wall_time) << "s"
      << " seed=" << sol.seed;
  return out.str();
}

int cmd_solve(const std::string& instance_path, const SearchFlags& flags, const std::string& out_path,
              const std::string& stats_prefix) {
  Instance instance = load_instance(instance_path);
  const auto config = make_config(flags, instance);
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < flags.jobs; ++i) {
    seeds.push_back(flags.seed + static_cast<std::uint64_t>(i));
  }
  auto results = alns::run_many(instance, config, seeds, flags.jobs);
  auto& result = results[alns::best_result(instance, results)];
  Solution& sol = result.solution;
  const double seconds = sol.wall_time;
  if (flags.iterations) {
    // Keeps the file identical across runs in iteration mode.
    sol.wall_time = 0;
  }
  if (!out_path.empty()) {
    write_file(out_path, write_solution(sol));
  }
  if (!stats_prefix.empty()) {
    write_file(stats_prefix + ".stats.json", alns::stats_to_json(result.stats));
    write_file(stats_prefix + ".trace.csv", alns::trace_to_csv(result.stats.trace));
  }
  sol.wall_time = seconds;
  std::cout << summary(sol) << " iterations=" << result.stats.iterations() << '\n';
  return sol.unassigned.empty() ? kOk : kInvalid;
}

int cmd_bench(const std::vector<std::string>& paths, int reps, const SearchFlags& flags, const std::string& out_path) {
  std::vector<BenchRow> rows;
  for (const auto& path : paths) {
    Instance instance = load_instance(path);
    const auto config = make_config(flags, instance);
    std::vector<std::uint64_t> seeds;
    for (int i = 0; i < reps; ++i) {
      seeds.push_back(flags.seed + static_cast<std::uint64_t>(i));
    }
    const auto results = alns::run_many(instance, config, seeds, flags.jobs);
    std::vector<double> costs;
    std::vector<int> routes;
    for (const auto& result : results) {
      costs.push_back(result.solution.cost.total());
      routes.push_back(static_cast<int>(result.solution.used_routes()));
    }
    const std::string name = instance.name.empty() ? std::filesystem::path(path).stem().string() : instance.name;
    rows.push_back(summarise_runs(name, instance.minimise_time ? 1 : 0, flags.time_limit, costs, routes));
    std::cerr << name << ": best=" << format_number(rows.back().best) << " avg=" << format_number(rows.back().avg)
              << " m=" << rows.back().m << '\n';
  }
  rows.push_back(aggregate_rows(rows));
  const auto csv = write_bench_csv(rows);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_file(out_path, csv);
  }
  return kOk;
}

int cmd_validate(const std::string& instance_path, const std::string& solution_path) {
  Instance instance = load_instance(instance_path);
  const Solution sol = load_solution(solution_path);
  instance.minimise_time = sol.minimise_time;
  const auto violations = validate_solution(instance, sol);
  for (const auto& v : violations) {
    std::cout << to_string(v.kind) << ": " << v.message << '\n';
  }
  if (!violations.empty()) {
    std::cout << "invalid: " << violations.size() << " violation(s)\n";
    return kInvalid;
  }
  const auto cost = evaluate_objective(instance, sol);
  std::cout << "valid: cost=" << format_number(cost.total()) << " distance=" << format_number(cost.distance)
            << " time=" << format_number(cost.time_term) << " vehicles=" << format_number(cost.vehicle_term)
            << " routes=" << sol.used_routes() << '\n';
  return kOk;
}

int cmd_gen(const std::string& instance_path, const GeneratorShape& shape, std::uint64_t seed, int count,
            const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::optional<Instance> base;
  if (!instance_path.empty()) {
    base = load_instance(instance_path);
  }
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    Instance inst = base ? perturb_instance(*base, s) : generate_instance(shape, s);
    if (base) {
      inst.name = base->name + "-p" + std::to_string(s);
    }
    const auto path = std::filesystem::path(out_dir) / (inst.name + ".txt");
    write_file(path.string(), write_instance(inst));
    std::cout << path.string() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vehicle routing with multiple time windows: adaptive large neighbourhood search"};
  app.require_subcommand(1);

  SearchFlags solve_flags;
  std::string solve_instance;
  std::string solve_out;
  std::string solve_stats;
  auto* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("--instance", solve_instance, "Instance file")->required()->check(CLI::ExistingFile);
  add_search_flags(*solve, solve_flags);
  solve->add_option("--out", solve_out, "Write the solution (JSON) here");
  solve->add_option("--stats", solve_stats, "Write <prefix>.stats.json and <prefix>.trace.csv");

  SearchFlags bench_flags;
  std::vector<std::string> bench_instances;
  int bench_reps = 10;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Repeated runs per instance; CSV report with best and average cost");
  bench->add_option("--instance,instances", bench_instances, "Instance files")->required()->check(CLI::ExistingFile);
  bench->add_option("--reps", bench_reps, "Runs per instance (seeds seed, seed+1, ...)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_search_flags(*bench, bench_flags);
  bench->add_option("--out", bench_out, "CSV report path (default: stdout)");

  std::string validate_instance;
  std::string validate_solution_path;
  auto* validate = app.add_subcommand("validate", "Check a solution file against an instance");
  validate->add_option("--instance", validate_instance, "Instance file")->required()->check(CLI::ExistingFile);
  validate->add_option("--solution", validate_solution_path, "Solution file")->required()->check(CLI::ExistingFile);

  std::string gen_instance;
  GeneratorShape shape;
  std::uint64_t gen_seed = 1;
  int gen_count = 1;
  std::string gen_out = ".";
  auto* gen = app.add_subcommand(
      "gen", "Write instances: window-set permutations of --instance, or random synthetic instances without it");
  gen->add_option("--instance", gen_instance, "Base instance to perturb")->check(CLI::ExistingFile);
  gen->add_option("--visits", shape.visits, "Synthetic: number of visits")->capture_default_str()->check(CLI::PositiveNumber);
  gen->add_option("--windows", shape.windows, "Synthetic: windows per visit")->capture_default_str()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "First seed")->capture_default_str();
  gen->add_option("--count", gen_count, "Number of instances")->capture_default_str()->check(CLI::PositiveNumber);
  gen->add_option("--out-dir", gen_out, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve->parsed()) {
      return cmd_solve(solve_instance, solve_flags, solve_out, solve_stats);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_instances, bench_reps, bench_flags, bench_out);
    }
    if (validate->parsed()) {
      return cmd_validate(validate_instance, validate_solution_path);
    }
    return cmd_gen(gen_instance, shape, gen_seed, gen_count, gen_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
}
