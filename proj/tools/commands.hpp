#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace greedy::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kSizeCap = 3;
inline constexpr int kEnvelopeOnIrregular = 4;
inline constexpr int kInterrupted = 130;

/// Entry point behind the greedy_nibble binary. `args` excludes the program
/// name. Subcommands: gen, run, sweep, drift-check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace greedy::cli
