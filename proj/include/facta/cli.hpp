#pragma once

/// Command-line front end. run_cli parses an argv-style argument list
/// (program name excluded), executes the single selected subcommand, and
/// writes results to `out` and error text to `err`.
///
/// Exit codes: 0 on success, 2 on parse or domain errors (bad literals,
/// membership violations, failed preconditions), 3 when a question
/// exceeds the configured oracle scale. The environment variable
/// FACTA_ORACLE_DEGREE_BOUND overrides the oracle's univariate degree
/// bound (default 8).

#include <iosfwd>
#include <string>
#include <vector>

namespace facta {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace facta
