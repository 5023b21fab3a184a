#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radtower::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage error,
/// 3 search exhausted, 4 precision failure.  Machine-parseable output goes
/// to `out` (JSON, or CSV with --format csv); human diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radtower::cli
