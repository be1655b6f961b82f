#pragma once

#include <iosfwd>

namespace loopchar {

/// Entry point of the loopchar command line. Returns 0 on success, 1 when a
/// computation fails or a --check comparison disagrees, 2 on bad arguments.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace loopchar
