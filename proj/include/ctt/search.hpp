#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ctt/construction.hpp"
#include "ctt/evaluation.hpp"
#include "ctt/rng.hpp"
#include "ctt/timetable.hpp"

namespace ctt {

enum class Algorithm {
  kThresholdAccepting,
  kIteratedLocalSearch,
};

/// One candidate move as seen by the acceptance rule; emitted through
/// SearchConfig::on_move for tracing and tests.
struct MoveRecord {
  Evaluation best_before;  // global best the candidate was judged against
  Evaluation candidate;
  bool accepted = false;      // candidate kept as the current solution
  bool perturbation = false;  // forced move after the patience ran out
  bool new_best = false;      // candidate strictly better than best_before
};

struct SearchConfig {
  Algorithm algorithm = Algorithm::kThresholdAccepting;
  // Accepted sc slack over the best, in whole percent (0 = hillclimbing).
  int threshold_percent = 0;
  int ruin_size = 5;
  // Iterated local search only: non-improving moves tolerated before a
  // perturbation is forced. <= 0 means never perturb.
  long long patience = 0;
  // Exactly one budget must be set (>= 0); the other stays -1.
  long long max_evaluations = -1;
  double max_seconds = -1;
  double order_flip_probability = 0.5;
  // Optional per-candidate trace hook; adds overhead, leave empty for runs.
  std::function<void(const MoveRecord&)> on_move;
};

struct SearchResult {
  Timetable best_timetable;
  Evaluation best_eval;
  long long evaluations = 0;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0;
};

/// Acceptance rule: better hc always wins; at equal hc the candidate may be
/// up to threshold_percent worse in sc than the best found so far. Exact
/// integer arithmetic (sc_cand * 100 <= sc_best * (100 + pct)).
bool accepts_candidate(const Evaluation& candidate, const Evaluation& best,
                       int threshold_percent);

struct RuinedEvent {
  int event = -1;
  Timeslot slot{};  // where it sat before removal
};

/// Unassigns min(k, assigned) distinct events chosen uniformly without
/// replacement; returns them with their former slots in removal order.
std::vector<RuinedEvent> ruin(IncrementalState& state, int k, Rng& rng);

/// Attempts every currently unassigned event once, in uniform random order,
/// placing each via select_timeslot when possible. Returns the events
/// actually assigned, in insertion order.
std::vector<int> recreate(IncrementalState& state, Rng& rng,
                          double order_flip_probability = 0.5);

/// Ruin-and-recreate search judged against the global best. Runs until the
/// configured budget is spent and returns the best solution ever seen. The
/// result is a pure function of (start, config, seed) under an evaluation
/// budget; wall-clock budgets cut off at a machine-dependent point.
SearchResult run_search(const Timetable& start, const SearchConfig& config,
                        std::uint64_t seed);

/// run_search with config.algorithm pinned to threshold accepting.
SearchResult ta_search(const Timetable& start, SearchConfig config,
                       std::uint64_t seed);

/// run_search with config.algorithm pinned to iterated local search
/// (hillclimbing acceptance plus patience-triggered perturbations).
SearchResult ils_search(const Timetable& start, SearchConfig config,
                        std::uint64_t seed);

}  // namespace ctt
