#pragma once

#include <iosfwd>

namespace cyclocode {

/// Entry point of the command-line tool. Returns 0 on success, 1 when a
/// verification check fails, 2 on usage or parameter errors.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cyclocode
