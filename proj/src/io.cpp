#include "ctt/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace ctt {

namespace {

// Line-oriented tokenizer over the input stream. Strips \r, skips blank
// lines, keeps the 1-based line number for error reporting.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (raw.find_first_not_of(" \t") == std::string::npos) continue;
      out = raw;
      return true;
    }
    return false;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int(const std::string& tok, int line, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer for " + what + ", got '" +
                               tok + "'");
  }
  return value;
}

int header_int(LineReader& reader, const std::string& key) {
  std::string line;
  if (!reader.next(line)) {
    throw ParseError(reader.line(), "unexpected end of file, expected '" +
                                        key + ":'");
  }
  const auto toks = tokens_of(line);
  if (toks.size() != 2 || toks[0] != key + ":") {
    throw ParseError(reader.line(), "expected '" + key + ": <n>', got '" +
                                        line + "'");
  }
  return parse_int(toks[1], reader.line(), key);
}

void expect_marker(LineReader& reader, const std::string& marker) {
  std::string line;
  if (!reader.next(line)) {
    throw ParseError(reader.line(),
                     "unexpected end of file, expected '" + marker + "'");
  }
  const auto toks = tokens_of(line);
  if (toks.size() != 1 || toks[0] != marker) {
    throw ParseError(reader.line(),
                     "expected '" + marker + "', got '" + line + "'");
  }
}

}  // namespace

Instance parse_instance(std::istream& in, std::vector<std::string>* warnings) {
  LineReader reader(in);
  InstanceData data;

  {
    std::string line;
    if (!reader.next(line)) throw ParseError(0, "empty input");
    const auto toks = tokens_of(line);
    if (toks.size() != 2 || toks[0] != "Name:") {
      throw ParseError(reader.line(),
                       "expected 'Name: <id>', got '" + line + "'");
    }
    data.name = toks[1];
  }
  const int course_count = header_int(reader, "Courses");
  const int room_count = header_int(reader, "Rooms");
  data.days = header_int(reader, "Days");
  data.periods_per_day = header_int(reader, "Periods_per_day");
  const int curriculum_count = header_int(reader, "Curricula");
  const int constraint_count = header_int(reader, "Constraints");

  expect_marker(reader, "COURSES:");
  for (int i = 0; i < course_count; ++i) {
    std::string line;
    if (!reader.next(line)) {
      throw ParseError(reader.line(),
                       "course count mismatch: header declares " +
                           std::to_string(course_count) + " courses, found " +
                           std::to_string(i));
    }
    const auto toks = tokens_of(line);
    if (toks.size() == 1 && toks[0] == "ROOMS:") {
      throw ParseError(reader.line(),
                       "course count mismatch: header declares " +
                           std::to_string(course_count) + " courses, found " +
                           std::to_string(i));
    }
    if (toks.size() != 5) {
      throw ParseError(reader.line(),
                       "expected '<id> <teacher> <lectures> "
                       "<min_working_days> <students>', got '" +
                           line + "'");
    }
    Course course;
    course.id = toks[0];
    course.teacher = toks[1];
    course.lectures = parse_int(toks[2], reader.line(), "lectures");
    course.min_working_days =
        parse_int(toks[3], reader.line(), "min working days");
    course.students = parse_int(toks[4], reader.line(), "students");
    data.courses.push_back(std::move(course));
  }

  expect_marker(reader, "ROOMS:");
  for (int i = 0; i < room_count; ++i) {
    std::string line;
    if (!reader.next(line)) {
      throw ParseError(reader.line(), "room count mismatch: header declares " +
                                          std::to_string(room_count) +
                                          " rooms, found " + std::to_string(i));
    }
    const auto toks = tokens_of(line);
    if (toks.size() == 1 && toks[0] == "CURRICULA:") {
      throw ParseError(reader.line(), "room count mismatch: header declares " +
                                          std::to_string(room_count) +
                                          " rooms, found " + std::to_string(i));
    }
    if (toks.size() != 2) {
      throw ParseError(reader.line(),
                       "expected '<id> <capacity>', got '" + line + "'");
    }
    data.rooms.push_back(
        Room{toks[0], parse_int(toks[1], reader.line(), "capacity")});
  }

  expect_marker(reader, "CURRICULA:");
  for (int i = 0; i < curriculum_count; ++i) {
    std::string line;
    if (!reader.next(line)) {
      throw ParseError(reader.line(),
                       "curriculum count mismatch: header declares " +
                           std::to_string(curriculum_count) +
                           " curricula, found " + std::to_string(i));
    }
    const auto toks = tokens_of(line);
    if (toks.size() == 1 && toks[0] == "UNAVAILABILITY_CONSTRAINTS:") {
      throw ParseError(reader.line(),
                       "curriculum count mismatch: header declares " +
                           std::to_string(curriculum_count) +
                           " curricula, found " + std::to_string(i));
    }
    if (toks.size() < 2) {
      throw ParseError(reader.line(),
                       "expected '<id> <count> <course>...', got '" + line +
                           "'");
    }
    const int member_count = parse_int(toks[1], reader.line(), "course count");
    if (static_cast<int>(toks.size()) != 2 + member_count) {
      throw ParseError(reader.line(),
                       "curriculum '" + toks[0] + "' declares " +
                           std::to_string(member_count) + " courses but lists " +
                           std::to_string(toks.size() - 2));
    }
    data.curricula.emplace_back(
        toks[0], std::vector<std::string>(toks.begin() + 2, toks.end()));
  }

  expect_marker(reader, "UNAVAILABILITY_CONSTRAINTS:");
  for (int i = 0; i < constraint_count; ++i) {
    std::string line;
    if (!reader.next(line)) {
      throw ParseError(reader.line(),
                       "constraint count mismatch: header declares " +
                           std::to_string(constraint_count) +
                           " constraints, found " + std::to_string(i));
    }
    const auto toks = tokens_of(line);
    if (toks.size() == 1 && toks[0] == "END.") {
      throw ParseError(reader.line(),
                       "constraint count mismatch: header declares " +
                           std::to_string(constraint_count) +
                           " constraints, found " + std::to_string(i));
    }
    if (toks.size() != 3) {
      throw ParseError(reader.line(),
                       "expected '<course-id> <day> <period>', got '" + line +
                           "'");
    }
    data.unavailability.emplace_back(toks[0],
                                     parse_int(toks[1], reader.line(), "day"),
                                     parse_int(toks[2], reader.line(), "period"));
  }

  expect_marker(reader, "END.");
  {
    std::string line;
    if (reader.next(line) && warnings != nullptr) {
      warnings->push_back("content after END. ignored (starting at line " +
                          std::to_string(reader.line()) + ")");
    }
  }

  try {
    return Instance(std::move(data));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(0, std::string(ex.what()));
  }
}

Instance parse_instance(const std::string& text,
                        std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_instance(in, warnings);
}

Instance load_instance(const std::string& path,
                       std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_instance(in, warnings);
}

std::string write_solution(const Timetable& timetable) {
  const Instance& inst = timetable.instance();
  std::string out;
  for (int e = 0; e < inst.event_count(); ++e) {
    if (!timetable.is_assigned(e)) continue;
    const Timeslot slot = timetable.slot_of(e);
    out += inst.course(inst.events()[e].course).id;
    out += ' ';
    out += inst.room(slot.room).id;
    out += ' ';
    out += std::to_string(slot.day);
    out += ' ';
    out += std::to_string(slot.period);
    out += '\n';
  }
  return out;
}

void save_solution(const Timetable& timetable, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << write_solution(timetable);
}

std::vector<SolutionLine> parse_solution_lines(const Instance& instance,
                                               std::istream& in) {
  std::unordered_map<std::string, int> course_by_id;
  std::unordered_map<std::string, int> room_by_id;
  for (int c = 0; c < instance.course_count(); ++c) {
    course_by_id[instance.course(c).id] = c;
  }
  for (int r = 0; r < instance.room_count(); ++r) {
    room_by_id[instance.room(r).id] = r;
  }

  std::vector<int> lines_per_course(instance.course_count(), 0);
  std::vector<SolutionLine> lines;
  LineReader reader(in);
  std::string raw;
  while (reader.next(raw)) {
    const auto toks = tokens_of(raw);
    if (toks.size() != 4) {
      throw ParseError(reader.line(),
                       "expected '<course-id> <room-id> <day> <period>', got '" +
                           raw + "'");
    }
    SolutionLine line;
    line.line_no = reader.line();
    const auto course_it = course_by_id.find(toks[0]);
    if (course_it == course_by_id.end()) {
      throw ParseError(reader.line(), "unknown course '" + toks[0] + "'");
    }
    line.course = course_it->second;
    const auto room_it = room_by_id.find(toks[1]);
    if (room_it == room_by_id.end()) {
      throw ParseError(reader.line(), "unknown room '" + toks[1] + "'");
    }
    line.room = room_it->second;
    line.day = parse_int(toks[2], reader.line(), "day");
    line.period = parse_int(toks[3], reader.line(), "period");
    if (line.day < 0 || line.day >= instance.day_count()) {
      throw ParseError(reader.line(), "day " + std::to_string(line.day) +
                                          " out of range [0, " +
                                          std::to_string(instance.day_count()) +
                                          ")");
    }
    if (line.period < 0 || line.period >= instance.periods_per_day()) {
      throw ParseError(reader.line(),
                       "period " + std::to_string(line.period) +
                           " out of range [0, " +
                           std::to_string(instance.periods_per_day()) + ")");
    }
    if (++lines_per_course[line.course] >
        instance.course(line.course).lectures) {
      throw ParseError(reader.line(),
                       "course '" + toks[0] + "' has more lines than its " +
                           std::to_string(instance.course(line.course).lectures) +
                           " lectures");
    }
    lines.push_back(line);
  }
  return lines;
}

RawAssignment assignment_from_lines(const Instance& instance,
                                    const std::vector<SolutionLine>& lines) {
  RawAssignment raw(instance.event_count());
  std::vector<int> next_event(instance.course_count());
  for (int c = 0; c < instance.course_count(); ++c) {
    next_event[c] = instance.first_event_of(c);
  }
  for (const SolutionLine& line : lines) {
    raw[next_event[line.course]++] = Timeslot{line.day, line.period, line.room};
  }
  return raw;
}

Timetable parse_solution(const Instance& instance, std::istream& in) {
  const auto lines = parse_solution_lines(instance, in);
  const RawAssignment raw = assignment_from_lines(instance, lines);
  const auto violations = validate_hard(instance, raw);
  if (!violations.empty()) {
    // Point at the latest line involved in the first violation.
    std::vector<int> event_line(instance.event_count(), 0);
    std::vector<int> next_event(instance.course_count());
    for (int c = 0; c < instance.course_count(); ++c) {
      next_event[c] = instance.first_event_of(c);
    }
    for (const SolutionLine& line : lines) {
      event_line[next_event[line.course]++] = line.line_no;
    }
    const HardViolation& first = violations.front();
    int line_no = event_line[first.event_a];
    if (first.event_b >= 0) {
      line_no = std::max(line_no, event_line[first.event_b]);
    }
    throw SolutionError("line " + std::to_string(line_no) + ": " +
                            first.describe(instance),
                        violations);
  }
  Timetable timetable(instance);
  for (int e = 0; e < instance.event_count(); ++e) {
    if (raw[e]) timetable.assign(e, *raw[e]);
  }
  return timetable;
}

Timetable parse_solution(const Instance& instance, const std::string& text) {
  std::istringstream in(text);
  return parse_solution(instance, in);
}

}  // namespace ctt
