#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace excoh {

// Exit codes: 0 success, 1 computational failure (invariant violation or failed
// verify suite), 2 usage error. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace excoh
