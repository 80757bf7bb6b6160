/**
 * @file cli.hpp
 *
 * Entry point of the fmp tool, callable in-process with arbitrary streams.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fmp::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kInsufficientOverlap = 3,
  kValidationError = 4,
};

/// `args` excludes the program name. FMP_CONFIG names the config file unless --config is given.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

/// Fixed notation with three decimals, as in the tables printed by compare and matrix.
std::string format_measure(double value);

}  // namespace fmp::cli
