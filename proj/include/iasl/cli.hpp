#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace iasl::cli {

/// Exit statuses of the command-line tool.
enum Status : int { ok = 0, negative = 1, usage = 2, budget = 3 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iasl::cli
