#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace assoc::cli {

/// Runs the command line `args` (without the program name).  Returns the
/// exit status: 0 when everything passed, 1 when a verification failed, 2 on
/// usage or runtime errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace assoc::cli
