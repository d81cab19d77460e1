#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace impbase::cli {

// Dispatches one subcommand. Exit code 0 on success, 1 on semantic failure
// (a failed verification, a construction precondition), 2 on usage or parse
// errors.
int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

} // namespace impbase::cli
