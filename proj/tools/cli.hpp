#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regcrys::cli {

/// Runs one command line (without the program name). Exit codes: 0 on
/// success, 1 for domain errors and failed verification, 2 for malformed
/// input or flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regcrys::cli
