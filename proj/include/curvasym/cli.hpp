#pragma once

#include <ostream>

namespace curvasym {

// Command-line front end. Returns the process exit code:
// 0 same/success, 1 different, 2 parse/usage, 3 degenerate curve,
// 4 expansion failure, 5 bad selector, 6 empty sample.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace curvasym
