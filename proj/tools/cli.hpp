#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prefdom::cli {

// Exit codes: 0 success / predicate true, 1 predicate false, 2 usage error,
// 3 data or capability error.
struct CommandOutcome {
    int exit_code = 0;
    std::string payload;      // report or emitted file content (stdout)
    std::string diagnostics;  // progress and error text (stderr)
};

/// Dispatches one CLI invocation. args excludes the program name; input
/// files named "-" read from stdin_stream.
CommandOutcome run_cli(const std::vector<std::string>& args, std::istream* stdin_stream = nullptr);

}  // namespace prefdom::cli
