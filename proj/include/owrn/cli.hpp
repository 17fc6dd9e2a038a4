#pragma once

#include <ostream>

namespace owrn::cli {

/// Command dispatcher behind the `owrn` binary. Returns the process exit
/// code: 0 on success, 1 on parse/validation errors, 2 on semantic negative
/// results (network not strongly connected, failed verification, no path
/// within the turn bound).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace owrn::cli
