#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossprod {

/// Runs one CLI invocation. Exit codes: 0 pass/solved, 1 property violated or
/// a failure-finding certificate, 2 input error, 3 inconclusive at the bounds.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossprod
