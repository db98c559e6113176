#pragma once

#include <iosfwd>

namespace subcode::cli {

/// Exit status: 0 success, 1 usage or input error, 2 infeasible request or
/// enumeration budget exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace subcode::cli
