#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgpmh::cli {

/// Exit codes of run_command.
inline constexpr int kExitVerdict = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

/// Runs one command line (without the program name). Reports go to `out`
/// as one JSON object per line, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace lgpmh::cli
