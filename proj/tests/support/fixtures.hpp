#pragma once

#include <string>

#include "ctt/instance.hpp"
#include "ctt/rng.hpp"

namespace ctt::testing {

/// Two courses, two rooms, 2x2 grid, one curriculum covering both courses,
/// c2 barred from day 0 period 0. Small enough to reason about by hand;
/// used all over the unit tests.
std::string toy1_text();
Instance toy1_instance();

struct RandomInstanceParams {
  int courses = 5;
  int min_lectures = 1;
  int max_lectures = 3;
  int rooms = 3;
  int days = 3;
  int periods_per_day = 4;
  int curricula = 2;
  int min_curriculum_size = 1;
  int max_curriculum_size = 3;
  int teachers = 3;
  int min_students = 1;
  int max_students = 40;
  int min_capacity = 5;
  int max_capacity = 40;
  double unavailability_prob = 0.1;
};

Instance make_random_instance(const RandomInstanceParams& params, Rng& rng);

/// Randomizes the dimensions themselves (<= 5 courses, <= 3 rooms, <= 3 days,
/// <= 4 periods/day) and then the content.
Instance random_tiny_instance(Rng& rng);

/// Fixed-seed instance with exactly 50 events on a 5x5 grid with 4 rooms.
Instance fifty_event_instance();

/// Fixed-seed instance with the dimensions of the smallest competition file:
/// 30 courses / 160 events, 6 rooms, 5 days x 6 periods, 14 curricula.
Instance competition_shaped_instance();

}  // namespace ctt::testing
