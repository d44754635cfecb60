#ifndef ORELAB_REPORT_HPP
#define ORELAB_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orelab/fixed.hpp"

namespace orelab {

/// One asserted inequality. slack is (right - left) for "left <= right"
/// style checks, always in exact fractional form.
struct CheckRow {
  std::string name;
  std::string graph;
  bool pass = false;
  std::int64_t slack_num = 0;
  std::int64_t slack_den = 21;
};

/// Observational row; never counted as pass or fail.
struct InfoRow {
  std::string name;
  std::string graph;
  std::string text;
};

class Report {
public:
  /// lhs >= rhs.
  void at_least(const std::string &name, const std::string &graph, Rat21 lhs,
                Rat21 rhs);
  /// lhs > rhs.
  void greater(const std::string &name, const std::string &graph, Rat21 lhs,
               Rat21 rhs);
  /// lhs == rhs; slack is lhs - rhs.
  void equal(const std::string &name, const std::string &graph, Rat21 lhs,
             Rat21 rhs);
  void equal(const std::string &name, const std::string &graph, Rat84 lhs,
             Rat84 rhs);
  /// A predicate without a numeric margin (slack 0).
  void holds(const std::string &name, const std::string &graph, bool value);
  void info(const std::string &name, const std::string &graph, std::string text);

  void append(const Report &other);

  const std::vector<CheckRow> &checks() const { return checks_; }
  const std::vector<InfoRow> &infos() const { return infos_; }
  const CheckRow *find(const std::string &name) const;
  int failures() const;
  bool all_pass() const { return failures() == 0; }

  /// "CHECK <name> <graph> PASS|FAIL slack=<num>/<den>" per check, then
  /// "INFO <name> <graph> <text>" per info row.
  std::string to_text() const;

private:
  std::vector<CheckRow> checks_;
  std::vector<InfoRow> infos_;
};

std::string format_row(const CheckRow &row);

} // namespace orelab

#endif // ORELAB_REPORT_HPP
