#pragma once

#include <string>
#include <vector>

namespace sepcat {

/// Outcome of a validator. Violations are data, not failures; each names the
/// offending labels so a report is readable without the source file.
struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string message) {
    ok = false;
    violations.push_back(std::move(message));
  }
  void merge(const ValidationReport& other) {
    for (const auto& v : other.violations) fail(v);
  }
};

}  // namespace sepcat
