#include "ctt/construction.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace ctt {

namespace {

// Collects the hard-feasible (period, room) cells of `course` whose room lies
// in `rooms`, in (period asc, class order) order.
void collect_class_slots(const Timetable& timetable, int course,
                         const std::vector<int>& rooms,
                         std::vector<std::pair<int, int>>& out) {
  out.clear();
  if (rooms.empty()) return;
  for (int p = 0; p < timetable.period_count(); ++p) {
    if (!timetable.period_open_for_course(course, p)) continue;
    for (int r : rooms) {
      if (timetable.event_at(p, r) < 0) out.emplace_back(p, r);
    }
  }
}

// One most-critical-first pass over `pending`. Assigns every event that still
// has a feasible cell when its turn comes; the rest are appended to `failed`
// (when given) and stay unassigned. Consumes `pending`.
void assign_most_critical_first(Timetable& timetable, std::vector<int> pending,
                                double order_flip_probability, Rng& rng,
                                std::vector<int>* failed) {
  const Instance& instance = timetable.instance();
  std::vector<int> course_slots(instance.course_count());
  std::vector<int> candidates;
  while (!pending.empty()) {
    // Slot counts are shared by all events of a course; compute once per step.
    std::fill(course_slots.begin(), course_slots.end(), -1);
    int best = -1;
    for (int event : pending) {
      const int course = instance.events()[event].course;
      if (course_slots[course] < 0) {
        course_slots[course] =
            timetable.count_available_slots_for_course(course);
      }
      if (best < 0 || course_slots[course] < best) best = course_slots[course];
    }
    candidates.clear();
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (course_slots[instance.events()[pending[i]].course] == best) {
        candidates.push_back(static_cast<int>(i));
      }
    }
    const int pick =
        candidates[rng.next_below(static_cast<std::uint64_t>(candidates.size()))];
    const int event = pending[pick];
    pending[pick] = pending.back();
    pending.pop_back();

    const auto slot =
        select_timeslot(timetable, event, rng, order_flip_probability);
    if (slot) {
      timetable.assign(event, *slot);
    } else if (failed != nullptr) {
      failed->push_back(event);
    }
  }
}

}  // namespace

std::optional<Timeslot> select_timeslot(const Timetable& timetable, int event,
                                        Rng& rng,
                                        double order_flip_probability) {
  const Instance& instance = timetable.instance();
  const int course = instance.events()[event].course;
  const RoomClassification& classes = instance.room_classes();

  const bool best_fit_first = rng.bernoulli(order_flip_probability);
  const std::vector<int>* order[3];
  if (best_fit_first) {
    order[0] = &classes.best_fit[course];
    order[1] = &classes.fits[course];
  } else {
    order[0] = &classes.fits[course];
    order[1] = &classes.best_fit[course];
  }
  order[2] = &classes.too_small[course];

  std::vector<std::pair<int, int>> slots;
  for (const std::vector<int>* rooms : order) {
    collect_class_slots(timetable, course, *rooms, slots);
    if (!slots.empty()) {
      const auto [period, room] =
          slots[rng.next_below(static_cast<std::uint64_t>(slots.size()))];
      return Timeslot{instance.day_of(period),
                      period % instance.periods_per_day(), room};
    }
  }
  return std::nullopt;
}

Timetable myopic_construct(const Instance& instance,
                           const ConstructionConfig& config, Rng& rng) {
  Timetable timetable(instance);
  std::vector<int> pending(instance.event_count());
  std::iota(pending.begin(), pending.end(), 0);
  assign_most_critical_first(timetable, std::move(pending),
                             config.order_flip_probability, rng, nullptr);
  return timetable;
}

ConstructionResult reactive_construct(const Instance& instance,
                                      const ConstructionConfig& config,
                                      Rng& rng) {
  if (config.max_loops < 1) {
    throw std::invalid_argument("reactive_construct: max_loops must be >= 1");
  }
  Timetable timetable(instance);
  std::vector<int> prioritized;  // previous loop's failures
  std::vector<std::uint8_t> is_prioritized(instance.event_count(), 0);
  int loops = 0;
  while (true) {
    timetable.clear();
    std::vector<int> failed;
    assign_most_critical_first(timetable, prioritized,
                               config.order_flip_probability, rng, &failed);
    std::vector<int> rest;
    rest.reserve(instance.event_count() - prioritized.size());
    for (int e = 0; e < instance.event_count(); ++e) {
      if (!is_prioritized[e]) rest.push_back(e);
    }
    assign_most_critical_first(timetable, std::move(rest),
                               config.order_flip_probability, rng, &failed);
    ++loops;
    if (failed.empty() || loops >= config.max_loops) {
      return ConstructionResult{std::move(timetable), loops};
    }
    for (int e : prioritized) is_prioritized[e] = 0;
    for (int e : failed) is_prioritized[e] = 1;
    prioritized = std::move(failed);
  }
}

}  // namespace ctt
