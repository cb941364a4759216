#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matchstick {

// Command line front end; returns the process exit code.  0 on success, 1
// when `verify` finds a mismatch (or a command fails), 2 on usage errors.
// The default worker count comes from MATCHSTICK_WORKERS, falling back to
// the hardware thread count.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matchstick
