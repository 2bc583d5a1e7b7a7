#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jbdet::cli {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2, kNumeric = 3, kUnsupported = 4 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jbdet::cli
