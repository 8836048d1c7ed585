#pragma once

#include <iosfwd>

namespace orbifold {

enum ExitCode : int {
    kExitOk = 0,
    kExitPropertyFailure = 1,
    kExitSchema = 2,
    kExitInvariant = 3,
};

/// The `orbifold` command line. Never throws; maps errors to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace orbifold
