#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvelab {

/// Runs one subcommand. `args` excludes the program name. Returns 0 on
/// success, 1 on a domain error (reported as {"error","detail"} JSON on
/// `out`) and 2 on a usage error (message on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvelab
