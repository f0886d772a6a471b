#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ctt {

struct Course {
  std::string id;
  std::string teacher;
  int lectures = 0;
  int min_working_days = 0;
  int students = 0;
};

struct Room {
  std::string id;
  int capacity = 0;
};

struct Curriculum {
  std::string id;
  std::vector<int> courses;  // indices into Instance::courses(), sorted
};

/// One schedulable lecture occurrence of a course.
struct Event {
  int index = 0;
  int course = 0;
};

struct Timeslot {
  int day = 0;
  int period = 0;  // within the day
  int room = 0;

  friend bool operator==(const Timeslot&, const Timeslot&) = default;
  friend auto operator<=>(const Timeslot&, const Timeslot&) = default;
};

/// Rooms of each course split by fit quality: best_fit holds the rooms with
/// the minimum non-negative capacity - students gap (all of them on ties),
/// fits the remaining rooms with capacity >= students, too_small the rest.
/// A course may still be placed in a too_small room; that costs soft penalty
/// points, not feasibility.
struct RoomClassification {
  std::vector<std::vector<int>> best_fit;   // r1
  std::vector<std::vector<int>> fits;       // r2
  std::vector<std::vector<int>> too_small;  // r3
};

struct InstanceData {
  std::string name;
  std::vector<Course> courses;
  std::vector<Room> rooms;
  std::vector<std::pair<std::string, std::vector<std::string>>> curricula;
  int days = 0;
  int periods_per_day = 0;
  std::vector<std::tuple<std::string, int, int>> unavailability;  // course id, day, period
};

std::vector<Event> build_events(std::span<const Course> courses);
RoomClassification classify_rooms(std::span<const Course> courses,
                                  std::span<const Room> rooms);

/// Immutable problem description plus the derived lookup structures the
/// solver needs (event list, room classes, conflict lists, availability
/// masks). Validates all referential and range invariants on construction;
/// throws std::invalid_argument on violation. Safe to share across threads.
class Instance {
 public:
  explicit Instance(InstanceData data);

  const std::string& name() const { return name_; }

  int course_count() const { return static_cast<int>(courses_.size()); }
  int room_count() const { return static_cast<int>(rooms_.size()); }
  int curriculum_count() const { return static_cast<int>(curricula_.size()); }
  int day_count() const { return days_; }
  int periods_per_day() const { return periods_per_day_; }
  int period_count() const { return days_ * periods_per_day_; }

  const Course& course(int c) const { return courses_[c]; }
  const Room& room(int r) const { return rooms_[r]; }
  const Curriculum& curriculum(int q) const { return curricula_[q]; }
  std::span<const Course> courses() const { return courses_; }
  std::span<const Room> rooms() const { return rooms_; }
  std::span<const Curriculum> curricula() const { return curricula_; }

  /// -1 when no such id exists.
  int course_index(const std::string& id) const;
  int room_index(const std::string& id) const;

  int event_count() const { return static_cast<int>(events_.size()); }
  const std::vector<Event>& events() const { return events_; }
  int first_event_of(int course) const { return first_event_[course]; }

  const RoomClassification& room_classes() const { return room_classes_; }

  int period_index(int day, int period) const {
    return day * periods_per_day_ + period;
  }
  int day_of(int period_index) const { return period_index / periods_per_day_; }

  bool unavailable(int course, int period_index) const {
    return unavailable_[static_cast<std::size_t>(course) * period_count() +
                        period_index] != 0;
  }
  int unavailability_count() const { return unavailability_count_; }

  /// Courses that may not share a period with `course`: same curriculum or
  /// same teacher. Includes `course` itself (two lectures of one course may
  /// not share a period either). Sorted.
  std::span<const int> conflicting_courses(int course) const {
    return {conflicts_.data() + conflict_offsets_[course],
            conflict_offsets_[course + 1] - conflict_offsets_[course]};
  }

  std::span<const int> curricula_of_course(int course) const {
    return {course_curricula_.data() + course_curricula_offsets_[course],
            course_curricula_offsets_[course + 1] -
                course_curricula_offsets_[course]};
  }

 private:
  std::string name_;
  std::vector<Course> courses_;
  std::vector<Room> rooms_;
  std::vector<Curriculum> curricula_;
  int days_ = 0;
  int periods_per_day_ = 0;
  int unavailability_count_ = 0;

  std::vector<Event> events_;
  std::vector<int> first_event_;
  RoomClassification room_classes_;
  std::vector<std::uint8_t> unavailable_;  // course * period_count + period

  // CSR-style flattened adjacency lists.
  std::vector<std::size_t> conflict_offsets_;
  std::vector<int> conflicts_;
  std::vector<std::size_t> course_curricula_offsets_;
  std::vector<int> course_curricula_;
};

}  // namespace ctt
