#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctt/construction.hpp"
#include "ctt/evaluation.hpp"
#include "ctt/io.hpp"
#include "ctt/parallel.hpp"
#include "ctt/report.hpp"
#include "ctt/rng.hpp"
#include "ctt/search.hpp"

namespace {

using namespace ctt;

// Exit codes: 0 success/feasible, 1 input error, 2 infeasible or invalid.
constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInfeasible = 2;

std::string resolve_instance_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (const char* dir = std::getenv("CTT_DATA_DIR"); dir && *dir) {
    const fs::path candidate = fs::path(dir) / path;
    if (fs::exists(candidate)) return candidate.string();
  }
  throw std::runtime_error("instance file not found: " + path +
                           " (also tried CTT_DATA_DIR)");
}

Instance load_resolved(const std::string& path) {
  std::vector<std::string> warnings;
  Instance instance = load_instance(resolve_instance_path(path), &warnings);
  for (const std::string& w : warnings) {
    std::cerr << "warning: " << path << ": " << w << "\n";
  }
  return instance;
}

struct BudgetFlags {
  long long evals = -1;
  double seconds = -1;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--evals", evals,
                   "candidate evaluation budget (machine independent)");
    cmd.add_option("--time", seconds, "wall clock budget in seconds");
  }

  // Applies the flags to a config, falling back to `default_evals` /
  // `default_seconds` (one of them >= 0) when neither flag was given.
  void apply(SearchConfig& config, long long default_evals,
             double default_seconds) const {
    if (evals >= 0 && seconds >= 0) {
      throw std::runtime_error("give either --evals or --time, not both");
    }
    config.max_evaluations = evals;
    config.max_seconds = seconds;
    if (evals < 0 && seconds < 0) {
      config.max_evaluations = default_evals;
      config.max_seconds = default_seconds;
    }
  }
};

bool apply_preset(const std::string& name, SearchConfig& config) {
  if (name == "ta0") {
    config.algorithm = Algorithm::kThresholdAccepting;
    config.threshold_percent = 0;
  } else if (name == "ta1") {
    config.algorithm = Algorithm::kThresholdAccepting;
    config.threshold_percent = 1;
  } else if (name == "ta2") {
    config.algorithm = Algorithm::kThresholdAccepting;
    config.threshold_percent = 2;
  } else if (name == "ils10k") {
    config.algorithm = Algorithm::kIteratedLocalSearch;
    config.patience = 10000;
  } else if (name == "ils3k") {
    config.algorithm = Algorithm::kIteratedLocalSearch;
    config.patience = 3000;
  } else {
    return false;
  }
  return true;
}

// Full pipeline for one seed: reactive construction, then search. The two
// phases draw from separate streams derived from the user-facing seed, so a
// (instance, config, seed) triple pins the whole run.
SearchResult run_one(const Instance& instance, int construction_loops,
                     const SearchConfig& search_config, std::uint64_t seed) {
  Rng build_rng(Rng::derive_seed(seed, 0));
  ConstructionConfig cc;
  cc.max_loops = construction_loops;
  cc.order_flip_probability = search_config.order_flip_probability;
  ConstructionResult built = reactive_construct(instance, cc, build_rng);
  SearchResult result =
      run_search(built.timetable, search_config, Rng::derive_seed(seed, 1));
  result.seed = seed;
  return result;
}

std::string describe_config(const SearchConfig& config) {
  std::string out = config.algorithm == Algorithm::kThresholdAccepting
                        ? "ta threshold=" +
                              std::to_string(config.threshold_percent) + "%"
                        : "ils patience=" + std::to_string(config.patience);
  out += " ruin=" + std::to_string(config.ruin_size);
  if (config.max_evaluations >= 0) {
    out += " evals=" + std::to_string(config.max_evaluations);
  } else {
    out += " time=" + std::to_string(config.max_seconds) + "s";
  }
  return out;
}

void print_breakdown(std::ostream& out, const SoftBreakdown& b) {
  out << "capacity=" << b.room_capacity
      << " min_working_days=" << b.min_working_days
      << " compactness=" << b.curriculum_compactness
      << " room_stability=" << b.room_stability;
}

int cmd_solve(const std::string& instance_path, std::string output_path,
              const std::string& algo, int threshold, long long patience,
              int ruin_size, int loops, const BudgetFlags& budget,
              std::uint64_t seed) {
  const Instance instance = load_resolved(instance_path);

  SearchConfig config;
  if (algo == "ta") {
    config.algorithm = Algorithm::kThresholdAccepting;
  } else if (algo == "ils") {
    config.algorithm = Algorithm::kIteratedLocalSearch;
  } else {
    throw std::runtime_error("unknown --algo '" + algo + "' (ta or ils)");
  }
  config.threshold_percent = threshold;
  config.patience = patience;
  config.ruin_size = ruin_size;
  budget.apply(config, -1, 375.0);

  const SearchResult result = run_one(instance, loops, config, seed);
  const EvalResult verified =
      evaluate_full(instance, result.best_timetable);

  if (output_path.empty()) {
    output_path =
        std::filesystem::path(instance_path).stem().string() + ".sol";
  }
  save_solution(result.best_timetable, output_path);

  std::cout << "instance: " << instance.name() << " ("
            << instance.course_count() << " courses, "
            << instance.room_count() << " rooms, " << instance.day_count()
            << " days x " << instance.periods_per_day() << " periods, "
            << instance.event_count() << " events)\n";
  std::cout << "config:   " << describe_config(config) << " seed=" << seed
            << "\n";
  std::cout << "result:   hc=" << result.best_eval.hc
            << " sc=" << result.best_eval.sc
            << " evaluations=" << result.evaluations << " elapsed="
            << result.elapsed_seconds << "s\n";
  std::cout << "breakdown: ";
  print_breakdown(std::cout, verified.breakdown);
  std::cout << "\nsolution written to " << output_path << "\n";

  return result.best_eval.hc == 0 ? kExitOk : kExitInfeasible;
}

int cmd_validate(const std::string& instance_path,
                 const std::string& solution_path) {
  const Instance instance = load_resolved(instance_path);
  std::ifstream in(solution_path);
  if (!in) throw std::runtime_error("cannot open '" + solution_path + "'");

  try {
    const Timetable timetable = parse_solution(instance, in);
    const EvalResult result = evaluate_full(instance, timetable);
    std::cout << "assigned " << timetable.assigned_count() << "/"
              << instance.event_count() << " events\n";
    std::cout << "hc: " << result.eval.hc << "\n";
    std::cout << "sc: " << result.eval.sc << " (";
    print_breakdown(std::cout, result.breakdown);
    std::cout << ")\n";
    return result.eval.hc == 0 ? kExitOk : kExitInfeasible;
  } catch (const SolutionError& error) {
    std::cerr << "invalid solution, " << error.violations().size()
              << " hard violation(s):\n";
    for (const HardViolation& v : error.violations()) {
      std::cerr << "  " << v.describe(instance) << "\n";
    }
    return kExitInfeasible;
  }
}

int cmd_construct(const std::string& instance_path, int trials, int loops,
                  std::uint64_t seed, int jobs) {
  const Instance instance = load_resolved(instance_path);
  if (trials < 1) throw std::runtime_error("--trials must be >= 1");
  if (loops < 1) throw std::runtime_error("--loops must be >= 1");

  // feasible_at[i] = loop in which trial i first became feasible, 0 if never.
  std::vector<int> feasible_at(trials, 0);
  parallel_for(trials, jobs, [&](int i) {
    Rng rng(Rng::derive_seed(seed, static_cast<std::uint64_t>(i)));
    ConstructionConfig config;
    config.max_loops = loops;
    const ConstructionResult result = reactive_construct(instance, config, rng);
    if (result.timetable.complete()) feasible_at[i] = result.loops;
  });

  std::cout << "loop,feasible_count\n";
  for (int l = 1; l <= loops; ++l) {
    int count = 0;
    for (int f : feasible_at) {
      if (f >= 1 && f <= l) ++count;
    }
    std::cout << l << "," << count << "\n";
  }
  return kExitOk;
}

int cmd_bench(const std::vector<std::string>& instance_paths,
              const std::vector<std::string>& config_names,
              std::vector<std::uint64_t> seeds, std::uint64_t seed_base,
              int runs, int ruin_size, int loops, const BudgetFlags& budget,
              int jobs, const std::string& csv_path,
              const std::string& runs_csv_path) {
  if (seeds.empty()) {
    for (int i = 0; i < runs; ++i) {
      seeds.push_back(seed_base + static_cast<std::uint64_t>(i));
    }
  }

  std::vector<SearchConfig> configs;
  for (const std::string& name : config_names) {
    SearchConfig config;
    config.ruin_size = ruin_size;
    if (!apply_preset(name, config)) {
      throw std::runtime_error("unknown config '" + name +
                               "' (ta0, ta1, ta2, ils10k, ils3k)");
    }
    budget.apply(config, 1000000, -1);
    configs.push_back(config);
  }

  struct Cell {
    int instance = 0;
    int config = 0;
    std::uint64_t seed = 0;
  };
  std::vector<const Instance*> instances;
  std::vector<std::string> instance_names;
  std::vector<std::unique_ptr<Instance>> storage;
  bool any_loaded = false;
  for (const std::string& path : instance_paths) {
    try {
      storage.push_back(std::make_unique<Instance>(load_resolved(path)));
      instances.push_back(storage.back().get());
      instance_names.push_back(storage.back()->name());
      any_loaded = true;
    } catch (const std::exception& error) {
      std::cerr << "error: " << path << ": " << error.what() << "\n";
      storage.push_back(nullptr);
      instances.push_back(nullptr);
      instance_names.push_back(path);
    }
  }
  if (!any_loaded) throw std::runtime_error("no instance could be loaded");

  std::vector<Cell> cells;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (instances[i] == nullptr) continue;
    for (std::size_t c = 0; c < configs.size(); ++c) {
      for (std::uint64_t s : seeds) {
        cells.push_back(Cell{static_cast<int>(i), static_cast<int>(c), s});
      }
    }
  }

  std::vector<RunSummary> summaries(cells.size());
  parallel_for(static_cast<int>(cells.size()), jobs, [&](int k) {
    const Cell& cell = cells[static_cast<std::size_t>(k)];
    SearchResult result =
        run_one(*instances[cell.instance], loops, configs[cell.config],
                cell.seed);
    summaries[static_cast<std::size_t>(k)] = summarize(result);
  });

  std::vector<RunReport> reports;
  std::size_t k = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (instances[i] == nullptr) continue;
    for (std::size_t c = 0; c < configs.size(); ++c) {
      RunReport report;
      report.instance = instance_names[i];
      report.config = config_names[c];
      for (std::size_t s = 0; s < seeds.size(); ++s) {
        report.runs.push_back(summaries[k++]);
      }
      reports.push_back(std::move(report));
    }
  }

  std::cout << report_table(reports);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot write '" + csv_path + "'");
    out << report_csv(reports);
  }
  if (!runs_csv_path.empty()) {
    std::ofstream out(runs_csv_path);
    if (!out) {
      throw std::runtime_error("cannot write '" + runs_csv_path + "'");
    }
    out << runs_csv(reports);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curriculum-based course timetabling solver"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "construct and improve a timetable");
  std::string solve_instance;
  std::string solve_output;
  std::string solve_algo = "ta";
  int solve_threshold = 1;
  long long solve_patience = 10000;
  int solve_ruin = 5;
  int solve_loops = 50;
  std::uint64_t solve_seed = 1;
  BudgetFlags solve_budget;
  solve->add_option("instance", solve_instance, "instance file")->required();
  solve->add_option("-o,--output", solve_output,
                    "solution file (default: <instance>.sol)");
  solve->add_option("--algo", solve_algo, "search algorithm: ta or ils");
  solve->add_option("--threshold", solve_threshold,
                    "accepted sc slack over the best, percent (ta)");
  solve->add_option("--patience", solve_patience,
                    "non-improving moves before a perturbation (ils)");
  solve->add_option("--ruin", solve_ruin, "events removed per move");
  solve->add_option("--loops", solve_loops, "construction loop limit");
  solve->add_option("--seed", solve_seed, "random seed");
  solve_budget.add_to(*solve);

  // validate
  auto* validate =
      app.add_subcommand("validate", "check a solution file against an instance");
  std::string validate_instance;
  std::string validate_solution;
  validate->add_option("instance", validate_instance, "instance file")
      ->required();
  validate->add_option("solution", validate_solution, "solution file")
      ->required();

  // construct
  auto* construct = app.add_subcommand(
      "construct", "construction experiment: feasibility counts per loop");
  std::string construct_instance;
  int construct_trials = 100;
  int construct_loops = 10;
  std::uint64_t construct_seed = 1;
  int construct_jobs = 1;
  construct->add_option("instance", construct_instance, "instance file")
      ->required();
  construct->add_option("--trials", construct_trials, "independent trials");
  construct->add_option("--loops", construct_loops, "loops per trial");
  construct->add_option("--seed", construct_seed, "base random seed");
  construct->add_option("--jobs", construct_jobs, "worker threads");

  // bench
  auto* bench = app.add_subcommand(
      "bench", "multi-seed benchmark over instances and search configs");
  std::vector<std::string> bench_instances;
  std::vector<std::string> bench_configs = {"ta0", "ta1", "ta2", "ils10k",
                                            "ils3k"};
  std::vector<std::uint64_t> bench_seeds;
  std::uint64_t bench_seed_base = 1;
  int bench_runs = 10;
  int bench_ruin = 5;
  int bench_loops = 50;
  int bench_jobs = 1;
  std::string bench_csv;
  std::string bench_runs_csv;
  BudgetFlags bench_budget;
  bench->add_option("instances", bench_instances, "instance files")
      ->required();
  bench->add_option("--configs", bench_configs,
                    "search configs: ta0 ta1 ta2 ils10k ils3k")
      ->delimiter(',');
  bench->add_option("--seeds", bench_seeds, "explicit seed list")
      ->delimiter(',');
  bench->add_option("--seed", bench_seed_base,
                    "base seed when --seeds is not given");
  bench->add_option("--runs", bench_runs, "seeds per cell (base, base+1, ...)");
  bench->add_option("--ruin", bench_ruin, "events removed per move");
  bench->add_option("--loops", bench_loops, "construction loop limit");
  bench->add_option("--jobs", bench_jobs, "worker threads");
  bench->add_option("--csv", bench_csv, "write summary CSV here");
  bench->add_option("--runs-csv", bench_runs_csv, "write per-run CSV here");
  bench_budget.add_to(*bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve->parsed()) {
      return cmd_solve(solve_instance, solve_output, solve_algo,
                       solve_threshold, solve_patience, solve_ruin,
                       solve_loops, solve_budget, solve_seed);
    }
    if (validate->parsed()) {
      return cmd_validate(validate_instance, validate_solution);
    }
    if (construct->parsed()) {
      return cmd_construct(construct_instance, construct_trials,
                           construct_loops, construct_seed, construct_jobs);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_instances, bench_configs, bench_seeds,
                       bench_seed_base, bench_runs, bench_ruin, bench_loops,
                       bench_budget, bench_jobs, bench_csv, bench_runs_csv);
    }
  } catch (const ParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
