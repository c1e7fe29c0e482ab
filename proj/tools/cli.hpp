#pragma once

#include <ostream>

namespace gersh::cli {

// Exit codes of the gersh tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitDisagreement = 2;

/// Parses argv and runs one subcommand (disks, regions, report, track, plot,
/// probe), writing results to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gersh::cli
