/**
 * @file cli.hpp
 * @brief The `mctsp` command line: generate, solve, oracle, decompose,
 *        verify and tightness.
 *
 * Exit codes: 0 success, 1 usage or contract error, 2 parse error,
 * 3 capacity exceeded, 4 coverage check failed.
 */

#ifndef MCTSP_CLI_HPP
#define MCTSP_CLI_HPP

#include <ostream>

namespace mctsp {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_parse = 2,
  exit_capacity = 3,
  exit_uncovered = 4,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mctsp

#endif  // MCTSP_CLI_HPP
