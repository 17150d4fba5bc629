#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace akschur::cli {

/// Runs one command. `args` excludes the program name. Returns 0 on success,
/// 1 when a computation precondition fails (or a verify suite fails) and 2 on
/// a parse or flag error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace akschur::cli
