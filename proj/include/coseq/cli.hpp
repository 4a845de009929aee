#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coseq::cli {

// Runs a full command-line invocation (arguments without the program name)
// against the given streams. Exit status: 0 on success, 1 on verification
// failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace coseq::cli
