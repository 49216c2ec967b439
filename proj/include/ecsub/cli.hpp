#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecsub::cli {

/// Dispatch one command: gen | color | verify | oracle | bounds | approx.
/// Results go to `out` as prefix-tagged lines, diagnostics to `err`.
/// Exit codes: 0 success, 1 input or usage error, 2 internal consistency
/// failure (a certified run that misses its own guarantee).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ecsub::cli
