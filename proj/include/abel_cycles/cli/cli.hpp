#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace abel_cycles::cli {

/// Exit codes: 0 some criterion holds (or reproduction passed), 1 every
/// criterion fails (or an assertion failed), 2 inapplicable or bad input.
enum ExitCode { kHolds = 0, kFails = 1, kUsage = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abel_cycles::cli
