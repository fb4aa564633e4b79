#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace curvegroup::report {

/// Entry point of the curvegroup tool. args[0] is the program name. Returns
/// the process exit code (0 pass, 1 verification failure, 2 usage, 3 cap).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvegroup::report
