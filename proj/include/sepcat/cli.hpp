#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sepcat {

/// Exit codes: 0 and 1 report the mathematical outcome of the verb, 2 means
/// malformed input, 3 an internal cross-check failure or an exceeded budget.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepcat
