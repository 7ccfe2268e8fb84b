#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qpoly::cli {

/// Dispatches one command invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on domain errors (bad states, singular algebra),
/// and 2 on usage or file-format errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace qpoly::cli
