#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pi3 {

/// Command-line front end. `args` are the argv-style arguments without the
/// program name; regular output goes to `out`, diagnostics to `err`.
///
/// Subcommands: classify, curve, surface, revolve, verify, parse.
/// Exit codes: 0 success, 1 expression parse error, 2 domain or usage error,
/// 3 partial output (rows with undefined fields), 4 verification failure.
/// Identical arguments produce byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pi3
