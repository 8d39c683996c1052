#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cmfock {

// Runs one CLI invocation; args exclude the program name.  Returns the
// process exit status: 0 ok, 1 failed checks, 2 usage, 3 computational
// failure (JSON diagnostic on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cmfock
