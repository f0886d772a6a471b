#include "ctt/search.hpp"

#include <chrono>
#include <stdexcept>

namespace ctt {

namespace {

void check_config(const SearchConfig& config) {
  if (config.ruin_size < 1) {
    throw std::invalid_argument("search: ruin_size must be >= 1");
  }
  if (config.threshold_percent < 0) {
    throw std::invalid_argument("search: threshold_percent must be >= 0");
  }
  const bool has_evals = config.max_evaluations >= 0;
  const bool has_time = config.max_seconds >= 0;
  if (has_evals == has_time) {
    throw std::invalid_argument(
        "search: set exactly one of max_evaluations and max_seconds");
  }
}

}  // namespace

bool accepts_candidate(const Evaluation& candidate, const Evaluation& best,
                       int threshold_percent) {
  if (candidate.hc != best.hc) return candidate.hc < best.hc;
  return candidate.sc * 100 <= best.sc * (100 + threshold_percent);
}

std::vector<RuinedEvent> ruin(IncrementalState& state, int k, Rng& rng) {
  std::vector<RuinedEvent> removed;
  removed.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto assigned = state.timetable().assigned_events();
    if (assigned.empty()) break;
    const int event =
        assigned[rng.next_below(static_cast<std::uint64_t>(assigned.size()))];
    const Timeslot slot = state.timetable().slot_of(event);
    state.apply_remove(event);
    removed.push_back(RuinedEvent{event, slot});
  }
  return removed;
}

std::vector<int> recreate(IncrementalState& state, Rng& rng,
                          double order_flip_probability) {
  const auto unassigned = state.timetable().unassigned_events();
  std::vector<int> pool(unassigned.begin(), unassigned.end());
  std::vector<int> inserted;
  inserted.reserve(pool.size());
  while (!pool.empty()) {
    const std::uint64_t i =
        rng.next_below(static_cast<std::uint64_t>(pool.size()));
    const int event = pool[i];
    pool[i] = pool.back();
    pool.pop_back();
    const auto slot =
        select_timeslot(state.timetable(), event, rng, order_flip_probability);
    if (slot) {
      state.apply_assign(event, *slot);
      inserted.push_back(event);
    }
  }
  return inserted;
}

SearchResult run_search(const Timetable& start, const SearchConfig& config,
                        std::uint64_t seed) {
  check_config(config);
  const bool hillclimb_acceptance =
      config.algorithm == Algorithm::kIteratedLocalSearch;
  const int threshold =
      hillclimb_acceptance ? 0 : config.threshold_percent;

  Rng rng(seed);
  IncrementalState state(start.instance(), start);
  Timetable best = start;
  Evaluation best_eval = state.evaluation();

  const auto t0 = std::chrono::steady_clock::now();
  const auto elapsed = [&t0] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  long long evaluations = 0;
  long long non_improving = 0;
  while (true) {
    if (config.max_evaluations >= 0) {
      if (evaluations >= config.max_evaluations) break;
    } else if (elapsed() >= config.max_seconds) {
      break;
    }

    const bool perturbation =
        config.algorithm == Algorithm::kIteratedLocalSearch &&
        config.patience > 0 && non_improving >= config.patience;

    const auto removed = ruin(state, config.ruin_size, rng);
    const auto inserted =
        recreate(state, rng, config.order_flip_probability);
    ++evaluations;
    const Evaluation candidate = state.evaluation();

    const bool new_best = candidate < best_eval;
    const bool accepted =
        perturbation || accepts_candidate(candidate, best_eval, threshold);
    if (config.on_move) {
      config.on_move(
          MoveRecord{best_eval, candidate, accepted, perturbation, new_best});
    }
    if (new_best) {
      best = state.timetable();
      best_eval = candidate;
    }
    if (!accepted) {
      // Inverse replay: drop the insertions, then restore the ruined events.
      for (auto it = inserted.rbegin(); it != inserted.rend(); ++it) {
        state.apply_remove(*it);
      }
      for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        state.apply_assign(it->event, it->slot);
      }
    }
    non_improving = (new_best || perturbation) ? 0 : non_improving + 1;
  }

  SearchResult result{std::move(best), best_eval, evaluations, seed,
                      elapsed()};
  return result;
}

SearchResult ta_search(const Timetable& start, SearchConfig config,
                       std::uint64_t seed) {
  config.algorithm = Algorithm::kThresholdAccepting;
  return run_search(start, config, seed);
}

SearchResult ils_search(const Timetable& start, SearchConfig config,
                        std::uint64_t seed) {
  config.algorithm = Algorithm::kIteratedLocalSearch;
  return run_search(start, config, seed);
}

}  // namespace ctt
