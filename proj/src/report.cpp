#include "orelab/report.hpp"

#include <algorithm>

namespace orelab {

void Report::at_least(const std::string &name, const std::string &graph,
                      Rat21 lhs, Rat21 rhs) {
  const std::int64_t s = (lhs - rhs).num;
  checks_.push_back({name, graph, s >= 0, s, 21});
}

void Report::greater(const std::string &name, const std::string &graph,
                     Rat21 lhs, Rat21 rhs) {
  const std::int64_t s = (lhs - rhs).num;
  checks_.push_back({name, graph, s > 0, s, 21});
}

void Report::equal(const std::string &name, const std::string &graph, Rat21 lhs,
                   Rat21 rhs) {
  const std::int64_t s = (lhs - rhs).num;
  checks_.push_back({name, graph, s == 0, s, 21});
}

void Report::equal(const std::string &name, const std::string &graph, Rat84 lhs,
                   Rat84 rhs) {
  const std::int64_t s = (lhs - rhs).num;
  if (s % 4 == 0)
    checks_.push_back({name, graph, s == 0, s / 4, 21});
  else
    checks_.push_back({name, graph, false, s, 84});
}

void Report::holds(const std::string &name, const std::string &graph, bool value) {
  checks_.push_back({name, graph, value, 0, 21});
}

void Report::info(const std::string &name, const std::string &graph,
                  std::string text) {
  infos_.push_back({name, graph, std::move(text)});
}

void Report::append(const Report &other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  infos_.insert(infos_.end(), other.infos_.begin(), other.infos_.end());
}

const CheckRow *Report::find(const std::string &name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const CheckRow &r) { return r.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

int Report::failures() const {
  return static_cast<int>(std::count_if(checks_.begin(), checks_.end(),
                                        [](const CheckRow &r) { return !r.pass; }));
}

std::string format_row(const CheckRow &row) {
  return "CHECK " + row.name + " " + row.graph + (row.pass ? " PASS" : " FAIL") +
         " slack=" + std::to_string(row.slack_num) + "/" +
         std::to_string(row.slack_den);
}

std::string Report::to_text() const {
  std::string out;
  for (const CheckRow &r : checks_)
    out += format_row(r) + "\n";
  for (const InfoRow &r : infos_)
    out += "INFO " + r.name + " " + r.graph + " " + r.text + "\n";
  return out;
}

} // namespace orelab
