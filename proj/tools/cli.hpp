#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyck::cli {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit status: 0 on success,
/// nonzero on a usage error, a failed check, or a refused input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyck::cli
