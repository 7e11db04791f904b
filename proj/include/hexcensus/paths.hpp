#pragma once

// Nonintersecting lattice paths (unit steps right or up in Z^2): the path
// model of centered vertically symmetric tilings, and a Pfaffian counter for
// families with forced and free endpoints checked against exhaustive search.

#include <cstdint>
#include <map>
#include <vector>

#include "hexcensus/exact.hpp"
#include "hexcensus/pfaffian.hpp"

namespace hexcensus {

struct Point {
  long x = 0;
  long y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Step : std::uint8_t { kRight, kUp };

struct Edge {
  Point from;
  Step step = Step::kRight;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Start points, forced endpoints S_1..S_q, free endpoints I_1, I_2, ... in
/// their total order, and weights. A path's weight is the product of its
/// edge weights times the weight of its endpoint; missing entries weigh 1.
struct PathConfig {
  std::vector<Point> starts;
  std::vector<Point> forced;
  std::vector<Point> free_ends;
  std::map<Edge, ExactRational> edge_weights;
  std::map<Point, ExactRational> endpoint_weights;
};

enum class Parity : std::uint8_t { kOdd, kEven };

/// How the sign of a path family is attached in the centered-symmetric
/// configuration.
enum class SignScheme : std::uint8_t {
  kEndpoint,  // weight -1 on free endpoints below the forced one
  kEdge,      // -1 on a fixed set of lattice edges
};

/// Number of monotone lattice paths from a to b; 0 if b is not reachable.
ExactInt h_count(Point a, Point b);

/// Weighted path sum from a to b under the config's weights.
ExactRational h_weighted(const PathConfig& config, Point a, Point b);

/// The matrix [[Q, H], [-H^t, 0]] of size p + q.
SkewMatrix path_matrix(const PathConfig& config);

/// (-1)^binom(q,2) * Pf(path_matrix). Throws ArgumentError if p + q is odd.
ExactRational stembridge_pf(const PathConfig& config);

/// Sum over permutations pi of sgn(pi) times the weight of all vertex-
/// disjoint families where path k runs from starts[pi(k)] to forced[k]
/// (k <= q) or to free endpoints in increasing order (k > q), by exhaustive
/// search. Throws ResourceError after `budget` search steps.
ExactRational signed_enumeration(const PathConfig& config,
                                 std::uint64_t budget = 50'000'000);

/// Families of vertex-disjoint paths from (-i, i), i = 1..p, to points
/// (-1, j), 1 <= j <= 2x+2n+1, one of which ends at (-1, x+n+1);
/// p = 2n+1 for Parity::kOdd and 2n for Parity::kEven. Direct backtracking.
ExactInt sym_path_census(long n, long x, Parity parity,
                         std::uint64_t budget = 50'000'000);

/// Stembridge configuration for the centered vertically symmetric tilings
/// of (2n+1, 2x, 2n+1) (odd) or (2n, 2x+1, 2n) (even, with a phantom start
/// and endpoint at (0, -1)).
PathConfig centered_sym_path_config(long n, long x, Parity parity,
                                    SignScheme scheme);

/// A small random configuration for property tests: 1 to 3 starts in
/// [0,2]^2, endpoints in [2,4]^2, p + q even, and weight -1 on a random
/// fifth of the edges. Deterministic in `seed`.
PathConfig random_small_config(std::uint64_t seed);

}  // namespace hexcensus
