#include "ctt/evaluation.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctt {

namespace {

long long min_days_penalty(const Instance& instance, int course, int assigned,
                           int distinct_days) {
  if (assigned == 0) return 0;
  const int shortfall =
      std::max(0, instance.course(course).min_working_days - distinct_days);
  return static_cast<long long>(kMinWorkingDaysWeight) * shortfall;
}

long long stability_penalty(int distinct_rooms) {
  return static_cast<long long>(kRoomStabilityWeight) *
         std::max(0, distinct_rooms - 1);
}

}  // namespace

EvalResult evaluate_full(const Instance& instance, const Timetable& timetable) {
  IncrementalState state(instance, timetable);
  return EvalResult{state.evaluation(), state.breakdown()};
}

const char* hard_clause_name(HardClause clause) {
  switch (clause) {
    case HardClause::kRoomOccupancy:
      return "room-occupancy";
    case HardClause::kCourseClash:
      return "course-clash";
    case HardClause::kConflictClash:
      return "curriculum-or-teacher-clash";
    case HardClause::kUnavailability:
      return "unavailability";
  }
  return "?";
}

std::string HardViolation::describe(const Instance& instance) const {
  const auto event_label = [&](int e) {
    return "event " + std::to_string(e) + " (course '" +
           instance.course(instance.events()[e].course).id + "')";
  };
  std::string msg = hard_clause_name(clause);
  msg += ": " + event_label(event_a);
  if (event_b >= 0) msg += " and " + event_label(event_b);
  msg += " at day " + std::to_string(where.day) + " period " +
         std::to_string(where.period);
  if (clause == HardClause::kRoomOccupancy) {
    msg += " room '" + instance.room(where.room).id + "'";
  }
  return msg;
}

RawAssignment raw_from_timetable(const Timetable& timetable) {
  RawAssignment raw(timetable.instance().event_count());
  for (int e : timetable.assigned_events()) raw[e] = timetable.slot_of(e);
  return raw;
}

std::vector<HardViolation> validate_hard(const Instance& instance,
                                         const RawAssignment& assignment) {
  if (static_cast<int>(assignment.size()) != instance.event_count()) {
    throw std::logic_error("validate_hard: assignment size mismatch");
  }
  std::vector<HardViolation> violations;
  std::vector<int> placed;
  for (int e = 0; e < instance.event_count(); ++e) {
    if (!assignment[e]) continue;
    const Timeslot& slot = *assignment[e];
    if (slot.day < 0 || slot.day >= instance.day_count() || slot.period < 0 ||
        slot.period >= instance.periods_per_day() || slot.room < 0 ||
        slot.room >= instance.room_count()) {
      throw std::logic_error("validate_hard: slot out of range for event " +
                             std::to_string(e));
    }
    const int course = instance.events()[e].course;
    if (instance.unavailable(course,
                             instance.period_index(slot.day, slot.period))) {
      violations.push_back(
          HardViolation{HardClause::kUnavailability, e, -1, slot});
    }
    placed.push_back(e);
  }
  for (std::size_t i = 0; i < placed.size(); ++i) {
    for (std::size_t j = i + 1; j < placed.size(); ++j) {
      const int a = placed[i];
      const int b = placed[j];
      const Timeslot& sa = *assignment[a];
      const Timeslot& sb = *assignment[b];
      if (sa.day != sb.day || sa.period != sb.period) continue;
      const int ca = instance.events()[a].course;
      const int cb = instance.events()[b].course;
      if (sa.room == sb.room) {
        violations.push_back(
            HardViolation{HardClause::kRoomOccupancy, a, b, sa});
      } else if (ca == cb) {
        violations.push_back(HardViolation{HardClause::kCourseClash, a, b, sa});
      } else {
        const auto conflicts = instance.conflicting_courses(ca);
        if (std::binary_search(conflicts.begin(), conflicts.end(), cb)) {
          violations.push_back(
              HardViolation{HardClause::kConflictClash, a, b, sa});
        }
      }
    }
  }
  return violations;
}

IncrementalState::IncrementalState(const Instance& instance, Timetable timetable)
    : instance_(&instance), timetable_(std::move(timetable)) {
  if (&timetable_.instance() != &instance) {
    throw std::logic_error("IncrementalState: timetable built for a different instance");
  }
  rebuild_counters();
}

void IncrementalState::rebuild_counters() {
  const Instance& inst = *instance_;
  const int periods = inst.period_count();
  curriculum_period_.assign(
      static_cast<std::size_t>(inst.curriculum_count()) * periods, 0);
  course_day_.assign(
      static_cast<std::size_t>(inst.course_count()) * inst.day_count(), 0);
  course_room_.assign(
      static_cast<std::size_t>(inst.course_count()) * inst.room_count(), 0);
  distinct_days_.assign(inst.course_count(), 0);
  distinct_rooms_.assign(inst.course_count(), 0);
  assigned_per_course_.assign(inst.course_count(), 0);
  breakdown_ = SoftBreakdown{};

  for (int e : timetable_.assigned_events()) {
    const int course = inst.events()[e].course;
    const Timeslot slot = timetable_.slot_of(e);
    const int period = inst.period_index(slot.day, slot.period);
    ++assigned_per_course_[course];
    if (++course_day_[static_cast<std::size_t>(course) * inst.day_count() +
                      slot.day] == 1) {
      ++distinct_days_[course];
    }
    if (++course_room_[static_cast<std::size_t>(course) * inst.room_count() +
                       slot.room] == 1) {
      ++distinct_rooms_[course];
    }
    for (int q : inst.curricula_of_course(course)) {
      ++curriculum_period_[static_cast<std::size_t>(q) * periods + period];
    }
    breakdown_.room_capacity +=
        static_cast<long long>(kRoomCapacityWeight) *
        std::max(0, inst.course(course).students - inst.room(slot.room).capacity);
  }

  for (int c = 0; c < inst.course_count(); ++c) {
    breakdown_.min_working_days +=
        min_days_penalty(inst, c, assigned_per_course_[c], distinct_days_[c]);
    if (assigned_per_course_[c] > 0) {
      breakdown_.room_stability += stability_penalty(distinct_rooms_[c]);
    }
  }

  const int ppd = inst.periods_per_day();
  for (int q = 0; q < inst.curriculum_count(); ++q) {
    const std::int32_t* row = curriculum_period_.data() +
                              static_cast<std::size_t>(q) * periods;
    for (int p = 0; p < periods; ++p) {
      if (row[p] == 0) continue;
      const int j = p % ppd;
      const bool left = j > 0 && row[p - 1] > 0;
      const bool right = j + 1 < ppd && row[p + 1] > 0;
      if (!left && !right) {
        breakdown_.curriculum_compactness +=
            static_cast<long long>(kCompactnessWeight) * row[p];
      }
    }
  }
}

/// Compactness contribution of the cells whose isolation status can change
/// when occupancy at `changed_period` changes: the cell itself and its two
/// in-day neighbours. Their status is read from the current counters.
long long IncrementalState::isolation_around(int curriculum, int day,
                                             int changed_period) const {
  const int ppd = instance_->periods_per_day();
  const int day_start = day * ppd;
  const std::int32_t* row =
      curriculum_period_.data() +
      static_cast<std::size_t>(curriculum) * instance_->period_count();
  long long penalty = 0;
  for (int p = changed_period - 1; p <= changed_period + 1; ++p) {
    if (p < day_start || p >= day_start + ppd) continue;
    if (row[p] == 0) continue;
    const bool left = p > day_start && row[p - 1] > 0;
    const bool right = p + 1 < day_start + ppd && row[p + 1] > 0;
    if (!left && !right) {
      penalty += static_cast<long long>(kCompactnessWeight) * row[p];
    }
  }
  return penalty;
}

long long IncrementalState::apply_assign(int event, Timeslot slot) {
  return apply_assign(event, instance_->period_index(slot.day, slot.period),
                      slot.room);
}

long long IncrementalState::apply_assign(int event, int period, int room) {
  timetable_.assign(event, period, room);  // throws on hard violation
  return soft_delta(event, period, room, +1);
}

long long IncrementalState::apply_remove(int event) {
  const Timeslot slot = timetable_.remove(event);  // throws if unassigned
  return soft_delta(event, instance_->period_index(slot.day, slot.period),
                    slot.room, -1);
}

long long IncrementalState::soft_delta(int event, int period, int room,
                                       int sign) {
  const Instance& inst = *instance_;
  const int course = inst.events()[event].course;
  const int day = inst.day_of(period);

  const long long cap_delta =
      sign * static_cast<long long>(kRoomCapacityWeight) *
      std::max(0, inst.course(course).students - inst.room(room).capacity);
  breakdown_.room_capacity += cap_delta;

  const long long days_before = min_days_penalty(
      inst, course, assigned_per_course_[course], distinct_days_[course]);
  const long long stab_before = stability_penalty(distinct_rooms_[course]);

  assigned_per_course_[course] += sign;
  auto& day_count =
      course_day_[static_cast<std::size_t>(course) * inst.day_count() + day];
  day_count += sign;
  if (sign > 0 && day_count == 1) ++distinct_days_[course];
  if (sign < 0 && day_count == 0) --distinct_days_[course];
  auto& room_use =
      course_room_[static_cast<std::size_t>(course) * inst.room_count() + room];
  room_use += sign;
  if (sign > 0 && room_use == 1) ++distinct_rooms_[course];
  if (sign < 0 && room_use == 0) --distinct_rooms_[course];

  const long long days_after = min_days_penalty(
      inst, course, assigned_per_course_[course], distinct_days_[course]);
  const long long stab_after = assigned_per_course_[course] > 0
                                   ? stability_penalty(distinct_rooms_[course])
                                   : 0;
  breakdown_.min_working_days += days_after - days_before;
  breakdown_.room_stability += stab_after - stab_before;

  long long compact_delta = 0;
  for (int q : inst.curricula_of_course(course)) {
    const long long before = isolation_around(q, day, period);
    curriculum_period_[static_cast<std::size_t>(q) * inst.period_count() +
                       period] += sign;
    const long long after = isolation_around(q, day, period);
    compact_delta += after - before;
  }
  breakdown_.curriculum_compactness += compact_delta;

  return cap_delta + (days_after - days_before) + (stab_after - stab_before) +
         compact_delta;
}

}  // namespace ctt
