#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symbool/sanfv.hpp"

namespace symbool {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitUsage = 2,       // malformed request
    kExitCapability = 3,  // input too large or budget exceeded
    kExitInvariant = 4,   // internal consistency check failed
};

// Accepts a SANFV bit string, a "v:" value vector, "sigma:i", "majority" or
// "threshold:k". Named constructors need n; bit strings must have n+1 entries
// when n is given.
Sanfv parse_function_spec(std::string_view spec, std::optional<int> n);

// args excludes the program name. Reports go to `out` unless --out is given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symbool
