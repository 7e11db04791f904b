#pragma once

// Command-line front end: count, verify, table and asympt subcommands.
// Results go to `out` as JSON (or CSV for tables), diagnostics to `err`.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource limit.

#include <iosfwd>
#include <string>
#include <vector>

#include "hexcensus/exact.hpp"

namespace hexcensus {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

struct CountRequest {
  long a = 0;
  long b = 0;
  long c = 0;
  std::string tiling_class = "all";  // all, vsym, hsym, centered, centered-vsym
  std::string method = "auto";       // formula, pfaffian, enumerate, auto
  bool force = false;                // lift the enumeration budget
};

struct CountResult {
  std::string method;  // the method actually used
  ExactInt count;
};

/// Throws ArgumentError when the class does not apply to the hexagon or the
/// method is unavailable for the class, ResourceError when enumeration is
/// over budget.
CountResult cmd_count(const CountRequest& request);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hexcensus
