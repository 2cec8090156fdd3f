#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csg {

/// Runs the csg command line with args excluding the program name. "-" as
/// a file name reads `in`. Returns the exit status: 0 on success, 2 for bad
/// input or flags, 3 when an internal check fails.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace csg
