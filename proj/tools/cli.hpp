#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simptree::cli {

/// Run the command-line front end on already-split arguments (argv without
/// the program name). Output goes to `out`, diagnostics to `err`. Returns the
/// process exit code: 0 when the queried property holds, 1 when it does not,
/// 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simptree::cli
