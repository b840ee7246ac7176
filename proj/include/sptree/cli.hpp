#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sptree {

/// Entry point of the `sptree` binary. Data goes to `out`, diagnostics to
/// `err`. Returns 0 on success, 1 on a domain or I/O error, 2 on a usage
/// error. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sptree
