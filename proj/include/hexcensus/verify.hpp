#pragma once

// Named invariant suites over every module. Each suite runs a fixed list of
// exact (or, for asympt, toleranced) checks and collects every mismatch
// instead of stopping at the first one.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hexcensus/exact.hpp"
#include "hexcensus/formulas.hpp"

namespace hexcensus {

struct VerifyFailure {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct VerifyOutcome {
  std::string suite;
  std::size_t cases = 0;
  std::vector<VerifyFailure> failures;
  std::vector<std::string> notes;
  double wall_seconds = 0;

  bool ok() const { return failures.empty(); }
};

/// The closed forms a suite checks. Tests swap one of them for a perturbed
/// version to confirm the suites notice.
struct FormulaSet {
  std::function<ExactInt(long, long, long)> count_T = hexcensus::count_T;
  std::function<ExactInt(long, long)> count_ST = hexcensus::count_ST;
  std::function<ExactRational(long, long)> q_factor = hexcensus::q_factor;
  std::function<ExactRational(long, long)> r_factor = hexcensus::r_factor;
  std::function<ExactInt(long, long)> centered_count = hexcensus::centered_count;
  std::function<ExactInt(long, long)> centered_sym_count =
      hexcensus::centered_sym_count;
};

inline constexpr std::uint64_t kVerifyTilingBudget = 20'000'000;

struct VerifyOptions {
  long max_n = 3;
  long max_x = 4;
  /// Hexagons with more tilings than this are skipped (and noted) by the
  /// oracle suite.
  std::uint64_t tiling_budget = kVerifyTilingBudget;
  unsigned workers = 0;
  std::uint64_t seed = 20240607;
  FormulaSet formulas;
};

/// core, pfaffian, matrices, theorems, oracle, asympt, all.
const std::vector<std::string>& suite_names();

/// Throws ArgumentError for an unknown suite name or negative bounds.
VerifyOutcome run_suite(std::string_view suite, const VerifyOptions& options = {});

/// Centered fraction of tilings for the two candidate "one third" families
/// (2n+1, 2n, 2n+1) and (2n+1, 2n+2, 2n+1).
struct OneThirdRow {
  long n = 0;
  HexSpec hexagon;
  ExactRational formula_ratio;
  bool has_oracle = false;
  ExactRational oracle_ratio;
};

struct OneThirdArbitration {
  std::vector<OneThirdRow> printed;   // (2n+1, 2n, 2n+1)
  std::vector<OneThirdRow> shifted;   // (2n+1, 2n+2, 2n+1)
  bool printed_is_one_third = false;
  bool shifted_is_one_third = false;
  bool oracle_agrees = false;

  /// At least one family gives exactly 1/3 and formulas match the oracle.
  bool consistent() const {
    return (printed_is_one_third || shifted_is_one_third) && oracle_agrees;
  }
  std::string summary() const;
};

/// Formula ratios for every n in `ns`; oracle ratios for n <= oracle_max_n.
OneThirdArbitration arbitrate_one_third(const std::vector<long>& ns,
                                        long oracle_max_n,
                                        const FormulaSet& formulas = {},
                                        std::uint64_t budget = kVerifyTilingBudget,
                                        unsigned workers = 0);

}  // namespace hexcensus
