#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctt/evaluation.hpp"
#include "ctt/instance.hpp"
#include "ctt/timetable.hpp"

namespace ctt {

/// Input error with the 1-based line it was detected on (0 = end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0
                               ? "line " + std::to_string(line) + ": " + message
                               : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Raised by parse_solution when the file breaks a hard constraint; carries
/// the full violation list for reporting.
class SolutionError : public std::runtime_error {
 public:
  SolutionError(std::string message, std::vector<HardViolation> violations)
      : std::runtime_error(std::move(message)),
        violations_(std::move(violations)) {}
  const std::vector<HardViolation>& violations() const { return violations_; }

 private:
  std::vector<HardViolation> violations_;
};

/// Parses an ITC 2007 track 3 instance (.ctt). Accepts \n or \r\n and
/// arbitrary blank lines; header counts must match section contents. Content
/// after END. is ignored; a note is appended to `warnings` when given.
Instance parse_instance(std::istream& in,
                        std::vector<std::string>* warnings = nullptr);
Instance parse_instance(const std::string& text,
                        std::vector<std::string>* warnings = nullptr);
Instance load_instance(const std::string& path,
                       std::vector<std::string>* warnings = nullptr);

/// One assigned event per line, `<course-id> <room-id> <day> <period>`, in
/// event order. Unassigned events are omitted.
std::string write_solution(const Timetable& timetable);
void save_solution(const Timetable& timetable, const std::string& path);

/// A parsed solution line together with its source line number.
struct SolutionLine {
  int line_no = 0;
  int course = 0;
  int room = 0;
  int day = 0;
  int period = 0;
};

/// Parses the 4-column solution format against `instance`. Format errors,
/// unknown ids, out-of-range fields and too many lines per course raise
/// ParseError.
std::vector<SolutionLine> parse_solution_lines(const Instance& instance,
                                               std::istream& in);

/// Lines are matched to the events of their course in event-index order
/// (lectures of a course are interchangeable, so any matching evaluates the
/// same).
RawAssignment assignment_from_lines(const Instance& instance,
                                    const std::vector<SolutionLine>& lines);

/// Full pipeline: parse, hard-check, build. Hard violations raise
/// SolutionError naming the clause and the offending line.
Timetable parse_solution(const Instance& instance, std::istream& in);
Timetable parse_solution(const Instance& instance, const std::string& text);

}  // namespace ctt
