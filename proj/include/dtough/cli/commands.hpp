#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dtough::cli {

enum ExitCode : int {
    kOk = 0,
    kAlarm = 1,
    kBadInput = 2,
    kRefused = 3,
};

/// Entry point of the `dtough` tool. Reports go to `out`, diagnostics to
/// `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the program name omitted.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dtough::cli
