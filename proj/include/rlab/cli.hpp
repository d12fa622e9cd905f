#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rlab {

/// Exit codes: 0 success, 1 malformed input, 2 construction failure,
/// 3 eigensolver failure, 4 a repro deviation outside its tolerance.
enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitConstruction = 2, kExitEigen = 3, kExitReproFail = 4 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlab
