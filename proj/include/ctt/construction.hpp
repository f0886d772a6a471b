#pragma once

#include <optional>

#include "ctt/rng.hpp"
#include "ctt/timetable.hpp"

namespace ctt {

struct ConstructionConfig {
  // Reconstruction passes before giving up on a fully assigned timetable.
  int max_loops = 50;
  // Chance of preferring best-fit rooms over merely-fitting ones when picking
  // a timeslot; the complement order is (fits, best-fit, too-small).
  double order_flip_probability = 0.5;
};

/// Picks a timeslot for an unassigned event. Room classes are tried in order
/// (best_fit, fits, too_small) with probability `order_flip_probability`,
/// else (fits, best_fit, too_small); the slot is drawn uniformly from the
/// first class that has any hard-feasible cell. Absent when the event cannot
/// be placed anywhere.
std::optional<Timeslot> select_timeslot(const Timetable& timetable, int event,
                                        Rng& rng,
                                        double order_flip_probability = 0.5);

/// Greedy one-pass construction: repeatedly assign the unassigned event with
/// the fewest hard-feasible cells left (ties uniform), or give up on it when
/// it has none. The returned timetable may have unassigned events.
Timetable myopic_construct(const Instance& instance,
                           const ConstructionConfig& config, Rng& rng);

struct ConstructionResult {
  Timetable timetable;
  int loops = 0;  // construction passes actually performed
};

/// Repeated construction that prioritizes the previous pass's failures: each
/// loop rebuilds from scratch, first placing last loop's unassigned events
/// (most-critical-first), then everything else. Stops when all events are
/// assigned or after config.max_loops passes. Loop 1 behaves exactly like
/// myopic_construct.
ConstructionResult reactive_construct(const Instance& instance,
                                      const ConstructionConfig& config,
                                      Rng& rng);

}  // namespace ctt
