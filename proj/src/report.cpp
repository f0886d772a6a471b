#include "ctt/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ctt {

namespace {

std::string format_double(double value) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << value;
  return out.str();
}

std::string format_opt_ll(const std::optional<long long>& value) {
  return value ? std::to_string(*value) : std::string("-");
}

std::string format_opt_mean(const std::optional<double>& value) {
  return value ? format_double(*value) : std::string("-");
}

std::vector<std::string> row_cells(const RunReport& report) {
  return {report.instance,
          report.config,
          std::to_string(report.runs.size()),
          std::to_string(report.feasible_count()),
          format_opt_ll(report.best_sc()),
          format_opt_mean(report.mean_sc()),
          format_opt_ll(report.worst_sc()),
          format_double(report.mean_evaluations()),
          format_double(report.total_seconds())};
}

const char* const kHeader[] = {"instance",  "config",   "seeds",
                               "feasible",  "best_sc",  "mean_sc",
                               "worst_sc",  "mean_evals", "total_s"};
constexpr int kColumns = 9;

}  // namespace

int RunReport::feasible_count() const {
  return static_cast<int>(
      std::count_if(runs.begin(), runs.end(),
                    [](const RunSummary& r) { return r.eval.hc == 0; }));
}

std::optional<long long> RunReport::best_sc() const {
  std::optional<long long> best;
  for (const RunSummary& r : runs) {
    if (r.eval.hc != 0) continue;
    if (!best || r.eval.sc < *best) best = r.eval.sc;
  }
  return best;
}

std::optional<long long> RunReport::worst_sc() const {
  std::optional<long long> worst;
  for (const RunSummary& r : runs) {
    if (r.eval.hc != 0) continue;
    if (!worst || r.eval.sc > *worst) worst = r.eval.sc;
  }
  return worst;
}

std::optional<double> RunReport::mean_sc() const {
  long long sum = 0;
  int count = 0;
  for (const RunSummary& r : runs) {
    if (r.eval.hc != 0) continue;
    sum += r.eval.sc;
    ++count;
  }
  if (count == 0) return std::nullopt;
  return static_cast<double>(sum) / count;
}

double RunReport::mean_evaluations() const {
  if (runs.empty()) return 0;
  double sum = 0;
  for (const RunSummary& r : runs) sum += static_cast<double>(r.evaluations);
  return sum / static_cast<double>(runs.size());
}

double RunReport::total_seconds() const {
  double sum = 0;
  for (const RunSummary& r : runs) sum += r.seconds;
  return sum;
}

std::string report_csv(std::span<const RunReport> reports) {
  std::string out;
  for (int c = 0; c < kColumns; ++c) {
    if (c > 0) out += ',';
    out += kHeader[c];
  }
  out += '\n';
  for (const RunReport& report : reports) {
    const auto cells = row_cells(report);
    for (int c = 0; c < kColumns; ++c) {
      if (c > 0) out += ',';
      out += cells[c];
    }
    out += '\n';
  }
  return out;
}

std::string report_table(std::span<const RunReport> reports) {
  std::vector<std::vector<std::string>> rows;
  rows.emplace_back(kHeader, kHeader + kColumns);
  for (const RunReport& report : reports) rows.push_back(row_cells(report));

  std::size_t width[kColumns] = {};
  for (const auto& row : rows) {
    for (int c = 0; c < kColumns; ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    for (int c = 0; c < kColumns; ++c) {
      if (c > 0) out += "  ";
      // Left-align the name columns, right-align the numbers.
      const bool left = c < 2;
      const std::string pad(width[c] - row[c].size(), ' ');
      out += left ? row[c] + pad : pad + row[c];
    }
    out += '\n';
  }
  return out;
}

std::string runs_csv(std::span<const RunReport> reports) {
  std::string out = "instance,config,seed,hc,sc,evaluations,seconds\n";
  for (const RunReport& report : reports) {
    for (const RunSummary& r : report.runs) {
      out += report.instance;
      out += ',';
      out += report.config;
      out += ',';
      out += std::to_string(r.seed);
      out += ',';
      out += std::to_string(r.eval.hc);
      out += ',';
      out += std::to_string(r.eval.sc);
      out += ',';
      out += std::to_string(r.evaluations);
      out += ',';
      out += format_double(r.seconds);
      out += '\n';
    }
  }
  return out;
}

}  // namespace ctt
