#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hurwitz::cli {

/// Full command-line entry point: parses argv, runs the analysis, writes the
/// report to `out` and diagnostics to `err`. Exit codes: 0 analysis complete
/// (including NotTN verdicts), 2 usage or parse errors, 3 computation errors
/// (with a structured error payload on stdout).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hurwitz::cli
