#pragma once

#include <optional>

#include "ctt/evaluation.hpp"
#include "ctt/instance.hpp"
#include "ctt/rng.hpp"

namespace ctt::testing {

// Deliberately naive re-implementations of the cost and feasibility rules,
// written straight from the problem definition with no shared code or state
// with the solver. Slow is fine; these exist to catch the solver lying.

struct NaiveHardCounts {
  int unavailability = 0;
  int room_occupancy = 0;  // pairs sharing a (period, room) cell
  int course_clash = 0;    // same-course pairs sharing a period
  int conflict_clash = 0;  // curriculum/teacher pairs sharing a period

  int total() const {
    return unavailability + room_occupancy + course_clash + conflict_clash;
  }
};

NaiveHardCounts naive_hard_counts(const Instance& instance,
                                  const RawAssignment& assignment);

SoftBreakdown naive_soft_breakdown(const Instance& instance,
                                   const RawAssignment& assignment);

Evaluation naive_evaluation(const Instance& instance,
                            const RawAssignment& assignment);

/// Random hard-feasible partial assignment built with naive checks only
/// (no solver data structures). Each event is attempted with probability
/// `fill` and placed in a uniformly chosen consistent cell, if any.
RawAssignment random_feasible_raw(const Instance& instance, Rng& rng,
                                  double fill = 1.0);

/// Exhaustive search over all complete assignments; returns the minimum sc
/// among hard-feasible ones, or absent when no complete feasible assignment
/// exists. Only sane for a handful of events.
std::optional<long long> exhaustive_min_sc(const Instance& instance);

}  // namespace ctt::testing
