#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wif::cli {

/// Exit status contract of every subcommand.
enum Exit : int {
  kOk = 0,
  kWarnings = 1, ///< validate only: report has warnings
  kError = 2,    ///< usage, load or computation failure
};

/// Runs `wif` with `args` (without the program name). Diagnostics go to
/// `err`, rendered results to `out` unless an output path is given.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace wif::cli
