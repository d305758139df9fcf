#pragma once

#include <ostream>

namespace qram::cli {

/// Runs one command line. Returns 0 when every requested check passed,
/// 1 when any check failed and 2 on a usage or configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qram::cli
