#pragma once

namespace cyclicap {

/// Entry point of the command-line tool. Exit codes: 0 success, 1 invalid
/// input, 2 verification failure (verify-fm / gap / check-ineq assertions).
int run_cli(int argc, const char* const* argv);

}  // namespace cyclicap
