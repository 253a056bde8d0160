#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simphom::cli {

// Exit codes, also listed in --help.
enum exit_code : int {
    ok = 0,
    internal_error = 1,
    usage_error = 2,
    file_not_found = 3,
    bad_parse = 4,
    bad_input = 5,
    not_supported = 6,
};

/// Runs one CLI invocation.  `args` excludes the program name.  All regular
/// output goes to `out`, diagnostics to `err`; the return value is the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace simphom::cli
