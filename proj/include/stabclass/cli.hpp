#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stabclass {

/// Runs the command line (arguments without the program name). Returns 0 on
/// success, 1 on domain or feasibility errors and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabclass
