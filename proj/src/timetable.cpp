#include "ctt/timetable.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ctt {

Timetable::Timetable(const Instance& instance)
    : instance_(&instance),
      room_count_(instance.room_count()),
      period_count_(instance.period_count()) {
  event_cell_.assign(instance.event_count(), -1);
  cell_event_.assign(static_cast<std::size_t>(period_count_) * room_count_, -1);
  conflict_count_.assign(
      static_cast<std::size_t>(instance.course_count()) * period_count_, 0);
  occupied_rooms_.assign(period_count_, 0);
  unassigned_.resize(instance.event_count());
  for (int e = 0; e < instance.event_count(); ++e) unassigned_[e] = e;
  membership_pos_.resize(instance.event_count());
  for (int e = 0; e < instance.event_count(); ++e) membership_pos_[e] = e;
}

void Timetable::clear() {
  if (assigned_.empty()) return;
  std::fill(event_cell_.begin(), event_cell_.end(), -1);
  std::fill(cell_event_.begin(), cell_event_.end(), -1);
  std::fill(conflict_count_.begin(), conflict_count_.end(), 0);
  std::fill(occupied_rooms_.begin(), occupied_rooms_.end(), 0);
  assigned_.clear();
  unassigned_.resize(event_cell_.size());
  for (int e = 0; e < static_cast<int>(event_cell_.size()); ++e) {
    unassigned_[e] = e;
    membership_pos_[e] = e;
  }
}

Timeslot Timetable::slot_of(int event) const {
  const std::int32_t cell = event_cell_[event];
  if (cell < 0) throw std::logic_error("slot_of: event is unassigned");
  const int period = cell / room_count_;
  return Timeslot{instance_->day_of(period), period % instance_->periods_per_day(),
                  cell % room_count_};
}

int Timetable::count_available_slots_for_course(int course) const {
  int count = 0;
  for (int p = 0; p < period_count_; ++p) {
    if (period_open_for_course(course, p)) {
      count += room_count_ - occupied_rooms_[p];
    }
  }
  return count;
}

std::vector<Timeslot> Timetable::available_timeslots(int event) const {
  const int course = instance_->events()[event].course;
  std::vector<Timeslot> slots;
  for (int p = 0; p < period_count_; ++p) {
    if (!period_open_for_course(course, p)) continue;
    for (int r = 0; r < room_count_; ++r) {
      if (cell_event_[static_cast<std::size_t>(p) * room_count_ + r] < 0) {
        slots.push_back(Timeslot{instance_->day_of(p),
                                 p % instance_->periods_per_day(), r});
      }
    }
  }
  return slots;
}

void Timetable::assign(int event, Timeslot slot) {
  assign(event, instance_->period_index(slot.day, slot.period), slot.room);
}

void Timetable::assign(int event, int period, int room) {
  if (event_cell_[event] >= 0) {
    throw std::logic_error("assign: event " + std::to_string(event) +
                           " is already assigned");
  }
  const int course = instance_->events()[event].course;
  if (!is_available_for_course(course, period, room)) {
    throw std::logic_error("assign: slot is not available for event " +
                           std::to_string(event) + " (course '" +
                           instance_->course(course).id + "')");
  }
  const std::int32_t cell =
      static_cast<std::int32_t>(period) * room_count_ + room;
  event_cell_[event] = cell;
  cell_event_[cell] = event;
  ++occupied_rooms_[period];
  for (int other : instance_->conflicting_courses(course)) {
    ++conflict_count_[static_cast<std::size_t>(other) * period_count_ + period];
  }
  move_between_lists(event, unassigned_, assigned_);
}

Timeslot Timetable::remove(int event) {
  const std::int32_t cell = event_cell_[event];
  if (cell < 0) throw std::logic_error("remove: event is unassigned");
  const int period = cell / room_count_;
  const int room = cell % room_count_;
  const int course = instance_->events()[event].course;
  event_cell_[event] = -1;
  cell_event_[cell] = -1;
  --occupied_rooms_[period];
  for (int other : instance_->conflicting_courses(course)) {
    --conflict_count_[static_cast<std::size_t>(other) * period_count_ + period];
  }
  move_between_lists(event, assigned_, unassigned_);
  return Timeslot{instance_->day_of(period), period % instance_->periods_per_day(),
                  room};
}

void Timetable::move_between_lists(int event, std::vector<int>& from,
                                   std::vector<int>& to) {
  const int pos = membership_pos_[event];
  const int last = from.back();
  from[pos] = last;
  membership_pos_[last] = pos;
  from.pop_back();
  membership_pos_[event] = static_cast<int>(to.size());
  to.push_back(event);
}

}  // namespace ctt
