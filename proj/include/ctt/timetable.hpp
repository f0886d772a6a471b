#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ctt/instance.hpp"

namespace ctt {

/// Partial assignment of events to (period, room) cells.
///
/// The class maintains hard feasibility as an invariant: assign() refuses any
/// cell that would double-book a room, clash two lectures of the same course,
/// clash courses sharing a curriculum or teacher, or land on an unavailable
/// period. Infeasibility therefore only ever shows up as unassigned events.
///
/// Bookkeeping kept incrementally for O(1) availability queries:
///   - the (period, room) -> event grid,
///   - per (course, period) count of assigned conflicting lectures,
///   - per period count of occupied rooms.
class Timetable {
 public:
  explicit Timetable(const Instance& instance);

  const Instance& instance() const { return *instance_; }

  int assigned_count() const { return static_cast<int>(assigned_.size()); }
  int unassigned_count() const { return static_cast<int>(unassigned_.size()); }
  bool complete() const { return unassigned_.empty(); }

  /// Event ids in no particular order; valid until the next mutation.
  std::span<const int> assigned_events() const { return assigned_; }
  std::span<const int> unassigned_events() const { return unassigned_; }

  bool is_assigned(int event) const { return event_cell_[event] >= 0; }
  Timeslot slot_of(int event) const;  // pre: assigned

  /// Event occupying (period, room), or -1.
  int event_at(int period, int room) const {
    return cell_event_[static_cast<std::size_t>(period) * room_count_ + room];
  }

  bool is_available(int event, int period, int room) const {
    return is_available_for_course(instance_->events()[event].course, period,
                                   room);
  }
  bool is_available_for_course(int course, int period, int room) const {
    return cell_event_[static_cast<std::size_t>(period) * room_count_ + room] <
               0 &&
           period_open_for_course(course, period);
  }

  /// Number of cells the event could currently be assigned to without
  /// breaking a hard constraint. Identical for all events of one course.
  int count_available_slots(int event) const {
    return count_available_slots_for_course(instance_->events()[event].course);
  }
  int count_available_slots_for_course(int course) const;

  /// All hard-feasible cells for the event, sorted by (day, period, room).
  std::vector<Timeslot> available_timeslots(int event) const;

  void assign(int event, Timeslot slot);
  void assign(int event, int period, int room);

  /// Unassigns the event and returns the freed slot.
  Timeslot remove(int event);

  void clear();

  int room_count() const { return room_count_; }
  int period_count() const { return period_count_; }

  /// True when no assigned lecture of a course conflicting with `course`
  /// (including the course itself) sits at `period` and the period is not
  /// listed as unavailable.
  bool period_open_for_course(int course, int period) const {
    return conflict_count_[static_cast<std::size_t>(course) * period_count_ +
                           period] == 0 &&
           !instance_->unavailable(course, period);
  }

 private:
  const Instance* instance_;
  int room_count_;
  int period_count_;

  std::vector<std::int32_t> event_cell_;      // encoded period*R+room, -1 open
  std::vector<std::int32_t> cell_event_;      // inverse grid
  std::vector<std::int32_t> conflict_count_;  // course x period
  std::vector<std::int32_t> occupied_rooms_;  // per period

  // Swap-removal lists for O(1) uniform sampling of either side.
  std::vector<int> assigned_;
  std::vector<int> unassigned_;
  std::vector<std::int32_t> membership_pos_;  // index into whichever list

  void move_between_lists(int event, std::vector<int>& from,
                          std::vector<int>& to);
};

}  // namespace ctt
