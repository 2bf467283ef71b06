#pragma once
// Command-line front end: tabulation (eval) and invariant suites (verify).

#include "glspec/core.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace glspec::cli {

enum class ExitCode : int {
  success = 0,
  verification_failed = 1,
  usage = 2,
  numerical = 3,
};

/// Parses "a:b:h" (inclusive, a + i h), a comma list, or a single number.
std::vector<double> parse_grid(const std::string &spec);

/// 17 significant digits with a '.' decimal separator, whatever the locale.
std::string format_number(double value);

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double limit = 0.0;
  bool pass = false;
};

/// Worker count: GLSPEC_THREADS when set (at most 256), else the hardware
/// concurrency.
unsigned thread_budget();

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace glspec::cli
