#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctt/instance.hpp"
#include "ctt/timetable.hpp"

namespace ctt {

// Soft constraint weights (ITC 2007 track 3).
inline constexpr int kRoomCapacityWeight = 1;
inline constexpr int kMinWorkingDaysWeight = 5;
inline constexpr int kCompactnessWeight = 2;
inline constexpr int kRoomStabilityWeight = 1;

/// Lexicographic objective: hc (unassigned events, distance to feasibility)
/// strictly dominates sc (weighted soft penalty). The defaulted comparison
/// gives exactly that order, so `a < b` means "a is better than b".
struct Evaluation {
  int hc = 0;
  long long sc = 0;

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
  friend auto operator<=>(const Evaluation&, const Evaluation&) = default;
};

inline bool is_better(const Evaluation& a, const Evaluation& b) { return a < b; }

struct SoftBreakdown {
  long long room_capacity = 0;
  long long min_working_days = 0;
  long long curriculum_compactness = 0;
  long long room_stability = 0;

  long long total() const {
    return room_capacity + min_working_days + curriculum_compactness +
           room_stability;
  }
  friend bool operator==(const SoftBreakdown&, const SoftBreakdown&) = default;
};

struct EvalResult {
  Evaluation eval;
  SoftBreakdown breakdown;
};

/// Full recomputation of (hc, sc) plus the per-constraint breakdown.
///
/// Soft costs on partial assignments follow the convention the whole solver
/// uses: a course with no assigned lecture contributes nothing; a partially
/// assigned course is costed over its assigned lectures, with the working-days
/// shortfall still measured against the full min_working_days requirement.
EvalResult evaluate_full(const Instance& instance, const Timetable& timetable);

enum class HardClause {
  kRoomOccupancy,   // two events in one (period, room) cell
  kCourseClash,     // two lectures of one course in the same period
  kConflictClash,   // curriculum- or teacher-conflicting courses share a period
  kUnavailability,  // event sits on a period its course may not use
};

const char* hard_clause_name(HardClause clause);

struct HardViolation {
  HardClause clause;
  int event_a = -1;
  int event_b = -1;  // -1 for unavailability violations
  Timeslot where{};

  std::string describe(const Instance& instance) const;
};

/// Assignment as raw data, one optional slot per event. This is the shape
/// solution files are checked in before a Timetable (which cannot represent
/// hard violations) is built from them.
using RawAssignment = std::vector<std::optional<Timeslot>>;

RawAssignment raw_from_timetable(const Timetable& timetable);

/// Checks all four hard clauses over a raw assignment and lists every
/// violation found; empty result means the assignment is hard-feasible.
std::vector<HardViolation> validate_hard(const Instance& instance,
                                         const RawAssignment& assignment);

/// Soft-penalty counters maintained under single-event assign/remove.
///
/// Owns the timetable it tracks; route every mutation through apply_assign /
/// apply_remove so the counters stay exact. Both operations return the sc
/// delta they caused and are exact inverses of each other, which is what lets
/// the search undo a rejected move by replaying the inverse operations.
class IncrementalState {
 public:
  IncrementalState(const Instance& instance, Timetable timetable);

  const Timetable& timetable() const { return timetable_; }
  const Instance& instance() const { return *instance_; }

  Evaluation evaluation() const {
    return Evaluation{timetable_.unassigned_count(), breakdown_.total()};
  }
  const SoftBreakdown& breakdown() const { return breakdown_; }

  /// Assigns the event (hard availability enforced by the timetable) and
  /// returns the resulting sc change.
  long long apply_assign(int event, Timeslot slot);
  long long apply_assign(int event, int period, int room);

  /// Removes the event and returns the resulting sc change.
  long long apply_remove(int event);

 private:
  const Instance* instance_;
  Timetable timetable_;
  SoftBreakdown breakdown_;

  std::vector<std::int32_t> curriculum_period_;  // curriculum x period counts
  std::vector<std::int32_t> course_day_;         // course x day counts
  std::vector<std::int32_t> course_room_;        // course x room counts
  std::vector<std::int32_t> distinct_days_;
  std::vector<std::int32_t> distinct_rooms_;
  std::vector<std::int32_t> assigned_per_course_;

  long long soft_delta(int event, int period, int room, int sign);
  long long isolation_around(int curriculum, int day, int changed_period) const;
  void rebuild_counters();
};

}  // namespace ctt
