#include "ctt/instance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ctt {

std::vector<Event> build_events(std::span<const Course> courses) {
  std::vector<Event> events;
  for (int c = 0; c < static_cast<int>(courses.size()); ++c) {
    for (int l = 0; l < courses[c].lectures; ++l) {
      events.push_back(Event{static_cast<int>(events.size()), c});
    }
  }
  return events;
}

RoomClassification classify_rooms(std::span<const Course> courses,
                                  std::span<const Room> rooms) {
  RoomClassification cls;
  const int nc = static_cast<int>(courses.size());
  const int nr = static_cast<int>(rooms.size());
  cls.best_fit.resize(nc);
  cls.fits.resize(nc);
  cls.too_small.resize(nc);
  for (int c = 0; c < nc; ++c) {
    int best_gap = std::numeric_limits<int>::max();
    for (int r = 0; r < nr; ++r) {
      const int gap = rooms[r].capacity - courses[c].students;
      if (gap >= 0 && gap < best_gap) best_gap = gap;
    }
    for (int r = 0; r < nr; ++r) {
      const int gap = rooms[r].capacity - courses[c].students;
      if (gap < 0) {
        cls.too_small[c].push_back(r);
      } else if (gap == best_gap) {
        cls.best_fit[c].push_back(r);
      } else {
        cls.fits[c].push_back(r);
      }
    }
  }
  return cls;
}

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

Instance::Instance(InstanceData data)
    : name_(std::move(data.name)),
      courses_(std::move(data.courses)),
      rooms_(std::move(data.rooms)),
      days_(data.days),
      periods_per_day_(data.periods_per_day) {
  require(days_ >= 1, "instance '" + name_ + "': days must be >= 1");
  require(periods_per_day_ >= 1,
          "instance '" + name_ + "': periods per day must be >= 1");

  std::unordered_map<std::string, int> course_by_id;
  for (int c = 0; c < course_count(); ++c) {
    const Course& course = courses_[c];
    require(course_by_id.emplace(course.id, c).second,
            "duplicate course id '" + course.id + "'");
    require(course.lectures >= 1,
            "course '" + course.id + "': lecture count must be >= 1");
    require(course.students >= 0,
            "course '" + course.id + "': students must be >= 0");
    require(course.min_working_days >= 1 && course.min_working_days <= days_,
            "course '" + course.id + "': min working days out of range");
  }

  std::unordered_map<std::string, int> room_by_id;
  for (int r = 0; r < room_count(); ++r) {
    require(room_by_id.emplace(rooms_[r].id, r).second,
            "duplicate room id '" + rooms_[r].id + "'");
    require(rooms_[r].capacity >= 0,
            "room '" + rooms_[r].id + "': capacity must be >= 0");
  }

  std::unordered_set<std::string> curriculum_ids;
  curricula_.reserve(data.curricula.size());
  for (auto& [id, member_ids] : data.curricula) {
    require(curriculum_ids.insert(id).second,
            "duplicate curriculum id '" + id + "'");
    require(!member_ids.empty(), "curriculum '" + id + "' is empty");
    Curriculum q;
    q.id = id;
    for (const std::string& cid : member_ids) {
      auto it = course_by_id.find(cid);
      require(it != course_by_id.end(),
              "curriculum '" + id + "' references unknown course '" + cid + "'");
      q.courses.push_back(it->second);
    }
    std::sort(q.courses.begin(), q.courses.end());
    require(std::adjacent_find(q.courses.begin(), q.courses.end()) ==
                q.courses.end(),
            "curriculum '" + id + "' lists a course twice");
    curricula_.push_back(std::move(q));
  }

  unavailable_.assign(static_cast<std::size_t>(course_count()) * period_count(),
                      0);
  for (const auto& [cid, day, period] : data.unavailability) {
    auto it = course_by_id.find(cid);
    require(it != course_by_id.end(),
            "unavailability references unknown course '" + cid + "'");
    require(day >= 0 && day < days_,
            "unavailability for '" + cid + "': day out of range");
    require(period >= 0 && period < periods_per_day_,
            "unavailability for '" + cid + "': period out of range");
    unavailable_[static_cast<std::size_t>(it->second) * period_count() +
                 period_index(day, period)] = 1;
  }
  unavailability_count_ = static_cast<int>(data.unavailability.size());

  events_ = build_events(courses_);
  first_event_.assign(course_count() + 1, 0);
  for (int c = 0; c < course_count(); ++c) {
    first_event_[c + 1] = first_event_[c] + courses_[c].lectures;
  }

  room_classes_ = classify_rooms(courses_, rooms_);

  // Curricula containing each course.
  std::vector<std::vector<int>> of_course(course_count());
  for (int q = 0; q < curriculum_count(); ++q) {
    for (int c : curricula_[q].courses) of_course[c].push_back(q);
  }
  course_curricula_offsets_.assign(course_count() + 1, 0);
  for (int c = 0; c < course_count(); ++c) {
    course_curricula_offsets_[c + 1] =
        course_curricula_offsets_[c] + of_course[c].size();
    course_curricula_.insert(course_curricula_.end(), of_course[c].begin(),
                             of_course[c].end());
  }

  // Period-conflict adjacency: same curriculum or same teacher, plus self.
  std::vector<std::unordered_set<int>> conflict_sets(course_count());
  for (int c = 0; c < course_count(); ++c) conflict_sets[c].insert(c);
  for (const Curriculum& q : curricula_) {
    for (int a : q.courses) {
      for (int b : q.courses) conflict_sets[a].insert(b);
    }
  }
  std::unordered_map<std::string, std::vector<int>> by_teacher;
  for (int c = 0; c < course_count(); ++c) {
    by_teacher[courses_[c].teacher].push_back(c);
  }
  for (const auto& [teacher, taught] : by_teacher) {
    for (int a : taught) {
      for (int b : taught) conflict_sets[a].insert(b);
    }
  }
  conflict_offsets_.assign(course_count() + 1, 0);
  for (int c = 0; c < course_count(); ++c) {
    std::vector<int> sorted(conflict_sets[c].begin(), conflict_sets[c].end());
    std::sort(sorted.begin(), sorted.end());
    conflict_offsets_[c + 1] = conflict_offsets_[c] + sorted.size();
    conflicts_.insert(conflicts_.end(), sorted.begin(), sorted.end());
  }
}

int Instance::course_index(const std::string& id) const {
  for (int c = 0; c < course_count(); ++c) {
    if (courses_[c].id == id) return c;
  }
  return -1;
}

int Instance::room_index(const std::string& id) const {
  for (int r = 0; r < room_count(); ++r) {
    if (rooms_[r].id == id) return r;
  }
  return -1;
}

}  // namespace ctt
