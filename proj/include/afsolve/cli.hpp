#pragma once

#include <iosfwd>

namespace afsolve::cli {

// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
    exit_ok = 0,
    exit_mismatch = 1,        // check found a disagreement
    exit_usage = 2,           // bad flags or values
    exit_parse_error = 3,     // malformed input file
    exit_budget = 4,          // search node budget exhausted
    exit_io = 5,              // cannot read or write a file
    exit_cap = 6,             // instance too large for the oracle
    exit_solver = 7,          // external ASP solver failed
    exit_timeout = 8,         // wall-clock timeout
};

/// Entry point of the `afsolve` tool. Payload goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace afsolve::cli
