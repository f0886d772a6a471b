#include <sstream>
#include <string>

#include "ctt/evaluation.hpp"
#include "ctt/io.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace ctt;
using namespace ctt::testing;

namespace {

std::string replace_all(std::string text, const std::string& from,
                        const std::string& to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

}  // namespace

TEST_CASE("parse_instance accepts the toy fixture") {
  std::vector<std::string> warnings;
  const Instance inst = parse_instance(toy1_text(), &warnings);
  CHECK(warnings.empty());
  CHECK(inst.name() == "TOY1");
  CHECK(inst.course_count() == 2);
  CHECK(inst.room_count() == 2);
  CHECK(inst.period_count() == 4);
  CHECK(inst.curriculum_count() == 1);
  CHECK(inst.unavailability_count() == 1);
  CHECK(inst.course(0).teacher == "t1");
  CHECK(inst.course(0).lectures == 2);
  CHECK(inst.course(1).students == 15);
  CHECK(inst.room(1).capacity == 20);
}

TEST_CASE("parse_instance accepts crlf line endings") {
  const Instance inst = parse_instance(replace_all(toy1_text(), "\n", "\r\n"));
  CHECK(inst.course_count() == 2);
}

TEST_CASE("parse_instance rejects count mismatches with line numbers") {
  const std::string text = replace_all(toy1_text(), "Courses: 2", "Courses: 3");
  try {
    parse_instance(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("count mismatch") != std::string::npos);
    CHECK(e.line() > 0);
  }
}

TEST_CASE("parse_instance names unknown curriculum members") {
  const std::string text = replace_all(toy1_text(), "q1 2 c1 c2", "q1 2 c1 c9");
  CHECK_THROWS_WITH_AS(parse_instance(text), doctest::Contains("c9"),
                       ParseError);
}

TEST_CASE("parse_instance requires the terminator") {
  const std::string text = replace_all(toy1_text(), "END.", "");
  CHECK_THROWS_WITH_AS(parse_instance(text), doctest::Contains("END."),
                       ParseError);
}

TEST_CASE("parse_instance rejects malformed numbers and headers") {
  CHECK_THROWS_AS(
      parse_instance(replace_all(toy1_text(), "c1 t1 2 2 10", "c1 t1 x 2 10")),
      ParseError);
  CHECK_THROWS_AS(
      parse_instance(replace_all(toy1_text(), "Days: 2", "Dayz: 2")),
      ParseError);
  CHECK_THROWS_AS(parse_instance(std::string("")), ParseError);
}

TEST_CASE("parse_instance warns about content after the terminator") {
  std::vector<std::string> warnings;
  parse_instance(toy1_text() + "stray line\n", &warnings);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("END.") != std::string::npos);
}

TEST_CASE("load_instance reports unreadable paths") {
  CHECK_THROWS_WITH_AS(load_instance("/nonexistent/path.ctt"),
                       doctest::Contains("cannot open"), ParseError);
}

TEST_CASE("write_solution emits one line per assigned event in event order") {
  const Instance inst = toy1_instance();
  Timetable tt(inst);
  CHECK(write_solution(tt).empty());

  tt.assign(0, Timeslot{0, 0, 0});
  CHECK(write_solution(tt) == "c1 rA 0 0\n");

  tt.assign(1, Timeslot{1, 0, 0});
  tt.assign(2, Timeslot{0, 1, 1});
  CHECK(write_solution(tt) == "c1 rA 0 0\nc1 rA 1 0\nc2 rB 0 1\n");
}

TEST_CASE("parse_solution round-trips write_solution") {
  const Instance inst = toy1_instance();
  Timetable tt(inst);
  tt.assign(0, Timeslot{0, 0, 0});
  tt.assign(1, Timeslot{1, 0, 0});
  tt.assign(2, Timeslot{0, 1, 1});

  const Timetable back = parse_solution(inst, write_solution(tt));
  CHECK(evaluate_full(inst, back).eval == evaluate_full(inst, tt).eval);
  CHECK(write_solution(back) == write_solution(tt));
}

TEST_CASE("parse_solution round-trips random feasible assignments") {
  Rng rng(2024);
  for (int i = 0; i < 25; ++i) {
    const Instance inst = random_tiny_instance(rng);
    const RawAssignment raw = random_feasible_raw(inst, rng, 0.8);
    Timetable tt(inst);
    for (int e = 0; e < inst.event_count(); ++e) {
      if (raw[e]) tt.assign(e, *raw[e]);
    }
    const Timetable back = parse_solution(inst, write_solution(tt));
    CHECK(evaluate_full(inst, back).eval == evaluate_full(inst, tt).eval);
    CHECK(write_solution(back) == write_solution(tt));
  }
}

TEST_CASE("parse_solution rejects hard violations with the clause named") {
  const Instance inst = toy1_instance();

  // c2 may not sit on day 0 period 0.
  CHECK_THROWS_WITH_AS(parse_solution(inst, std::string("c2 rB 0 0\n")),
                       doctest::Contains("unavailability"), SolutionError);

  // Two lectures of c1 in one period.
  CHECK_THROWS_WITH_AS(
      parse_solution(inst, std::string("c1 rA 0 0\nc1 rB 0 0\n")),
      doctest::Contains("course-clash"), SolutionError);

  // Curriculum conflict between c1 and c2.
  CHECK_THROWS_WITH_AS(
      parse_solution(inst, std::string("c1 rA 0 1\nc2 rB 0 1\n")),
      doctest::Contains("curriculum-or-teacher-clash"), SolutionError);

  // Room double booking.
  try {
    parse_solution(inst, std::string("c1 rA 0 1\nc2 rA 0 1\n"));
    FAIL("expected SolutionError");
  } catch (const SolutionError& e) {
    CHECK(std::string(e.what()).find("room-occupancy") != std::string::npos);
    CHECK(e.violations().size() >= 1);
  }
}

TEST_CASE("parse_solution rejects malformed files") {
  const Instance inst = toy1_instance();
  CHECK_THROWS_WITH_AS(parse_solution(inst, std::string("cX rA 0 0\n")),
                       doctest::Contains("cX"), ParseError);
  CHECK_THROWS_WITH_AS(parse_solution(inst, std::string("c1 rZ 0 0\n")),
                       doctest::Contains("rZ"), ParseError);
  CHECK_THROWS_AS(parse_solution(inst, std::string("c1 rA 5 0\n")), ParseError);
  CHECK_THROWS_AS(parse_solution(inst, std::string("c1 rA 0 7\n")), ParseError);
  CHECK_THROWS_AS(parse_solution(inst, std::string("c1 rA 0\n")), ParseError);
  // c1 has only two lectures.
  CHECK_THROWS_WITH_AS(
      parse_solution(
          inst, std::string("c1 rA 0 0\nc1 rA 1 0\nc1 rB 0 1\n")),
      doctest::Contains("more lines"), ParseError);
}

TEST_CASE("partial solutions parse and count as unassigned") {
  const Instance inst = toy1_instance();
  const Timetable tt = parse_solution(inst, std::string("c2 rB 1 1\n"));
  CHECK(tt.assigned_count() == 1);
  const auto result = evaluate_full(inst, tt);
  CHECK(result.eval.hc == 2);
}
