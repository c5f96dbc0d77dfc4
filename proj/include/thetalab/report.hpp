#pragma once

// Experiment reports with deterministic serialization: sorted keys and floats
// rounded to 9 significant digits.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "thetalab/graph_io.hpp"

namespace thetalab {

/// Nearest double to the 9-significant-digit decimal rounding of x.
inline double round9(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

inline std::string format9(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

struct Check {
  std::string name;       // what was checked
  std::string operation;  // library operation that produced the value
  std::string anchor;     // the statement it instantiates
  Json expected;          // number, bound description, or bool
  Json observed;
  double tolerance = 0.0;
  bool pass = false;
};

/// Builders for the common check shapes.
struct CheckList {
  std::vector<Check> checks;

  void near(std::string name, std::string op, std::string anchor, double expected, double observed, double tol) {
    checks.push_back({std::move(name), std::move(op), std::move(anchor), expected, observed, tol,
                      std::abs(observed - expected) <= tol});
  }
  void at_most(std::string name, std::string op, std::string anchor, double bound, double observed, double tol) {
    checks.push_back({std::move(name), std::move(op), std::move(anchor), Json{{"at_most", bound}}, observed, tol,
                      observed <= bound + tol});
  }
  void at_least(std::string name, std::string op, std::string anchor, double bound, double observed, double tol) {
    checks.push_back({std::move(name), std::move(op), std::move(anchor), Json{{"at_least", bound}}, observed, tol,
                      observed >= bound - tol});
  }
  void equal(std::string name, std::string op, std::string anchor, std::int64_t expected, std::int64_t observed) {
    checks.push_back({std::move(name), std::move(op), std::move(anchor), expected, observed, 0.0, expected == observed});
  }
  void holds(std::string name, std::string op, std::string anchor, bool observed) {
    checks.push_back({std::move(name), std::move(op), std::move(anchor), true, observed, 0.0, observed});
  }
};

struct ExperimentReport {
  std::string experiment;
  Json parameters = Json::object();
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> runtime_ms;  // serialized only when timing was requested

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  void add(std::vector<Check> more) { checks.insert(checks.end(), more.begin(), more.end()); }
};

namespace detail {

inline Json rounded(const Json& j) {
  if (j.is_number_float()) return round9(j.get<double>());
  if (j.is_object() || j.is_array()) {
    Json out = j;
    for (auto it = out.begin(); it != out.end(); ++it) *it = rounded(*it);
    return out;
  }
  return j;
}

}  // namespace detail

inline Json report_to_json(const ExperimentReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"operation", c.operation},
                      {"anchor", c.anchor},
                      {"expected", c.expected},
                      {"observed", c.observed},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  Json out = {{"experiment", r.experiment},
              {"parameters", r.parameters},
              {"checks", std::move(checks)},
              {"seed", r.seed},
              {"pass", r.pass()}};
  if (r.runtime_ms) out["runtime_ms"] = *r.runtime_ms;
  return detail::rounded(out);
}

inline std::string value_text(const Json& j) {
  if (j.is_number_float()) return format9(j.get<double>());
  if (j.is_object() && j.size() == 1) {
    const auto it = j.begin();
    const std::string& key = it.key();
    return (key == "at_most" ? "<= " : key == "at_least" ? ">= " : key + " ") + value_text(it.value());
  }
  return j.dump();
}

/// One line per check, then an overall verdict.
inline std::string report_to_text(const ExperimentReport& r) {
  std::ostringstream out;
  out << "experiment " << r.experiment << " (seed " << r.seed << ")\n";
  for (const auto& c : r.checks) {
    out << (c.pass ? "  pass  " : "  FAIL  ") << c.name << ": observed " << value_text(c.observed)
        << ", expected " << value_text(c.expected);
    if (c.tolerance > 0.0) out << " (tol " << format9(c.tolerance) << ")";
    out << "  [" << c.operation << "; " << c.anchor << "]\n";
  }
  if (r.runtime_ms) out << "runtime " << *r.runtime_ms << " ms\n";
  out << (r.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace thetalab
