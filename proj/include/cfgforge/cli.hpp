#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace cfgforge::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,        // word rejected, or grammars differ
  kUsage = 2,           // bad arguments, unreadable file, syntax or validation error
  kPrecondition = 3,    // empty language, variant explosion, bound too large
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The max-len cap after applying CFG_FORGE_MAXLEN, which may only lower it.
std::size_t effective_max_len_cap();

}  // namespace cfgforge::cli
