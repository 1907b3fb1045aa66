#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace copeland {

// Entry point shared by the binary and the tests. Returns the process exit
// code: 0 on success with all internal assertions held, 1 on usage/input
// errors, 2 when the enumeration budget is exceeded, 3 on internal errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace copeland
