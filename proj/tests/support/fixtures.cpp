#include "support/fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "ctt/io.hpp"

namespace ctt::testing {

std::string toy1_text() {
  return "Name: TOY1\n"
         "Courses: 2\n"
         "Rooms: 2\n"
         "Days: 2\n"
         "Periods_per_day: 2\n"
         "Curricula: 1\n"
         "Constraints: 1\n"
         "\n"
         "COURSES:\n"
         "c1 t1 2 2 10\n"
         "c2 t2 1 1 15\n"
         "\n"
         "ROOMS:\n"
         "rA 10\n"
         "rB 20\n"
         "\n"
         "CURRICULA:\n"
         "q1 2 c1 c2\n"
         "\n"
         "UNAVAILABILITY_CONSTRAINTS:\n"
         "c2 0 0\n"
         "\n"
         "END.\n";
}

Instance toy1_instance() { return parse_instance(toy1_text()); }

Instance make_random_instance(const RandomInstanceParams& params, Rng& rng) {
  const auto between = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng.next_below(
                    static_cast<std::uint64_t>(hi - lo + 1)));
  };

  InstanceData data;
  data.name = "RND";
  data.days = params.days;
  data.periods_per_day = params.periods_per_day;

  for (int c = 0; c < params.courses; ++c) {
    Course course;
    course.id = "c" + std::to_string(c + 1);
    course.teacher = "t" + std::to_string(between(1, params.teachers));
    course.lectures = between(params.min_lectures, params.max_lectures);
    course.min_working_days = between(1, params.days);
    course.students = between(params.min_students, params.max_students);
    data.courses.push_back(std::move(course));
  }
  for (int r = 0; r < params.rooms; ++r) {
    data.rooms.push_back(
        Room{"r" + std::to_string(r + 1),
             between(params.min_capacity, params.max_capacity)});
  }
  for (int q = 0; q < params.curricula; ++q) {
    const int size = std::min(
        params.courses,
        between(params.min_curriculum_size, params.max_curriculum_size));
    std::vector<int> pool(params.courses);
    std::iota(pool.begin(), pool.end(), 0);
    rng.shuffle(pool);
    std::vector<std::string> members;
    for (int i = 0; i < size; ++i) {
      members.push_back(data.courses[pool[i]].id);
    }
    data.curricula.emplace_back("q" + std::to_string(q + 1),
                                std::move(members));
  }
  for (int c = 0; c < params.courses; ++c) {
    for (int d = 0; d < params.days; ++d) {
      for (int p = 0; p < params.periods_per_day; ++p) {
        if (rng.next_double() < params.unavailability_prob) {
          data.unavailability.emplace_back(data.courses[c].id, d, p);
        }
      }
    }
  }
  return Instance(std::move(data));
}

Instance random_tiny_instance(Rng& rng) {
  const auto between = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng.next_below(
                    static_cast<std::uint64_t>(hi - lo + 1)));
  };
  RandomInstanceParams params;
  params.courses = between(1, 5);
  params.rooms = between(1, 3);
  params.days = between(1, 3);
  params.periods_per_day = between(1, 4);
  params.min_lectures = 1;
  params.max_lectures = std::min(3, params.days * params.periods_per_day);
  params.curricula = between(0, 2);
  params.max_curriculum_size = std::min(3, params.courses);
  params.teachers = between(1, 3);
  return make_random_instance(params, rng);
}

Instance fifty_event_instance() {
  // 10 courses x 5 lectures on a 5x5 grid with 4 rooms; fixed seed so the
  // fixture is identical across runs.
  Rng rng(0x50EEEEu);
  RandomInstanceParams params;
  params.courses = 10;
  params.min_lectures = 5;
  params.max_lectures = 5;
  params.rooms = 4;
  params.days = 5;
  params.periods_per_day = 5;
  params.curricula = 4;
  params.min_curriculum_size = 2;
  params.max_curriculum_size = 4;
  params.teachers = 6;
  params.min_students = 5;
  params.max_students = 40;
  params.min_capacity = 10;
  params.max_capacity = 40;
  params.unavailability_prob = 0.05;
  return make_random_instance(params, rng);
}

Instance competition_shaped_instance() {
  Rng rng(0xC0317u);
  const auto between = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng.next_below(
                    static_cast<std::uint64_t>(hi - lo + 1)));
  };

  InstanceData data;
  data.name = "SHAPED01";
  data.days = 5;
  data.periods_per_day = 6;

  const int room_caps[6] = {100, 50, 75, 35, 30, 60};
  for (int r = 0; r < 6; ++r) {
    data.rooms.push_back(Room{"R" + std::to_string(r + 1), room_caps[r]});
  }
  // 30 courses totalling exactly 160 lectures.
  for (int c = 0; c < 30; ++c) {
    Course course;
    course.id = "c" + std::to_string(c + 1);
    course.teacher = "t" + std::to_string(between(1, 24));
    course.lectures = 5 + (c < 10 ? 1 : 0);
    course.min_working_days = between(2, 4);
    course.students = between(15, 90);
    data.courses.push_back(std::move(course));
  }
  for (int q = 0; q < 14; ++q) {
    std::vector<int> pool(30);
    std::iota(pool.begin(), pool.end(), 0);
    rng.shuffle(pool);
    const int size = between(3, 6);
    std::vector<std::string> members;
    for (int i = 0; i < size; ++i) {
      members.push_back(data.courses[pool[i]].id);
    }
    data.curricula.emplace_back("q" + std::to_string(q + 1),
                                std::move(members));
  }
  for (int c = 0; c < 30; ++c) {
    for (int d = 0; d < data.days; ++d) {
      for (int p = 0; p < data.periods_per_day; ++p) {
        if (rng.next_double() < 0.05) {
          data.unavailability.emplace_back(data.courses[c].id, d, p);
        }
      }
    }
  }
  return Instance(std::move(data));
}

}  // namespace ctt::testing
