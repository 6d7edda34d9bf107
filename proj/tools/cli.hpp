#pragma once

#include <iosfwd>

namespace ramtower::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kPrecisionError = 2, kUsage = 64 };

/// Parses argv, runs one subcommand and writes a JSON RunReport to out.
/// Usage errors go to err with the grammar.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ramtower::cli
