#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctt/evaluation.hpp"
#include "ctt/search.hpp"

namespace ctt {

/// Slim per-seed record kept by the benchmark harness (the full timetable is
/// dropped once the solution file, if any, has been written).
struct RunSummary {
  std::uint64_t seed = 0;
  Evaluation eval;
  long long evaluations = 0;
  double seconds = 0;
};

inline RunSummary summarize(const SearchResult& result) {
  return RunSummary{result.seed, result.best_eval, result.evaluations,
                    result.elapsed_seconds};
}

/// All runs of one (instance, configuration) cell plus derived aggregates.
/// Feasible means hc == 0; sc statistics cover feasible runs only.
struct RunReport {
  std::string instance;
  std::string config;
  std::vector<RunSummary> runs;

  int feasible_count() const;
  std::optional<long long> best_sc() const;
  std::optional<long long> worst_sc() const;
  std::optional<double> mean_sc() const;
  double mean_evaluations() const;
  double total_seconds() const;
};

/// CSV with one row per report: instance, config, seeds, feasible, best_sc,
/// mean_sc, worst_sc, mean_evaluations, total_seconds.
std::string report_csv(std::span<const RunReport> reports);

/// Same data as an aligned, human-readable text table.
std::string report_table(std::span<const RunReport> reports);

/// Per-run detail CSV: instance, config, seed, hc, sc, evaluations, seconds.
std::string runs_csv(std::span<const RunReport> reports);

}  // namespace ctt
