#pragma once

#include <iosfwd>

namespace mgdual::cli {

/// Runs the mgdual command line. Exit codes: 0 success, 1 usage, parse or
/// validation error, 2 oracle mismatch under --verify.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mgdual::cli
