#pragma once

// Brute-force enumeration of all lozenge tilings of a hexagon, classified
// by vertical/horizontal symmetry and by whether the central lozenge is
// used. This is the ground truth every closed form is checked against.

#include <cstdint>
#include <functional>
#include <optional>

#include "hexcensus/exact.hpp"
#include "hexcensus/formulas.hpp"
#include "hexcensus/region.hpp"

namespace hexcensus {

inline constexpr std::uint64_t kDefaultTilingBudget = 10'000'000;

struct CensusOptions {
  /// Largest tiling count (known in advance from count_T) to enumerate.
  std::uint64_t budget = kDefaultTilingBudget;
  /// 0 means default_worker_count().
  unsigned workers = 0;
};

/// Symmetry fields are set only when a == c; centered fields only when the
/// hexagon has a central lozenge.
struct TilingCensus {
  ExactInt total;
  std::optional<ExactInt> vsym;
  std::optional<ExactInt> hsym;
  std::optional<ExactInt> centered;
  std::optional<ExactInt> centered_vsym;
  std::optional<ExactInt> centered_hsym;
};

/// Hardware concurrency, capped by the HEXCENSUS_THREADS environment
/// variable when it holds a positive integer.
unsigned default_worker_count();

/// Throws ResourceError (before searching) when count_T exceeds the budget.
TilingCensus census(const HexSpec& spec, const CensusOptions& options = {});

/// Calls `visit` with every tiling of a small region, in search order.
/// Throws ResourceError when count_T exceeds `budget`.
void for_each_tiling(const HexRegion& region,
                     const std::function<void(const Tiling&)>& visit,
                     std::uint64_t budget = 100'000);

}  // namespace hexcensus
