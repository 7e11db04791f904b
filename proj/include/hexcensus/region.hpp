#pragma once

// Triangular-lattice geometry of an (a,b,c) hexagon with vertical b-sides.
//
// Lattice points are integer pairs (col, row) in the basis
//   D2 = (sqrt(3)/2, -1/2)  (col + 1),   V = (0, 1)  (row + 1),
// so that D1 = D2 + V points up-right. The hexagon has corners
//   (0,0) (a,0) (a+c,c) (a+c,c+b) (c,c+b) (0,b).
// Lattice lines are vertical, so unit triangles point left or right:
//   right-pointing R(col,row): (col,row) (col,row+1) (col+1,row+1)
//   left-pointing  L(col,row): (col,row) (col+1,row) (col+1,row+1)
// Every lozenge joins one R and one L triangle across a shared edge.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hexcensus/formulas.hpp"

namespace hexcensus {

struct LatticePoint {
  long col = 0;
  long row = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class TriangleKind : std::uint8_t { kLeft, kRight };

struct Triangle {
  long col = 0;
  long row = 0;
  TriangleKind kind = TriangleKind::kLeft;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;

  std::array<LatticePoint, 3> vertices() const;
};

/// Named by the direction of the edge the two triangles share.
enum class LozengeType : std::uint8_t { kVertical, kRising, kFalling };

/// Indices (into HexRegion::cells()) of the right- and left-pointing
/// triangles making up one lozenge.
struct Lozenge {
  int right = -1;
  int left = -1;
  friend auto operator<=>(const Lozenge&, const Lozenge&) = default;
};

struct Tiling {
  std::vector<Lozenge> lozenges;
};

inline constexpr int kNoNeighbor = -1;

class HexRegion {
 public:
  /// Throws DomainError for negative sides or a = b = c = 0.
  explicit HexRegion(HexSpec spec);

  const HexSpec& spec() const { return spec_; }

  /// Cells ordered strip by strip (col), bottom to top within a strip.
  const std::vector<Triangle>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  std::optional<int> index_of(const Triangle& t) const;

  /// The up to three edge-adjacent cells of cell `i` inside the region,
  /// indexed by LozengeType; kNoNeighbor where the neighbour is outside.
  const std::array<int, 3>& neighbors(int i) const { return neighbors_[i]; }

  bool contains(LatticePoint p) const;

  /// Lozenge whose centre coincides with the hexagon centre, if any.
  const std::optional<Lozenge>& central_lozenge() const { return central_; }

  /// Cell permutations for the reflections across the vertical and the
  /// horizontal symmetry axis; present only when a == c.
  const std::optional<std::vector<int>>& vertical_mirror() const {
    return vertical_mirror_;
  }
  const std::optional<std::vector<int>>& horizontal_mirror() const {
    return horizontal_mirror_;
  }

  LozengeType type_of(const Lozenge& z) const;

  /// True iff the lozenges are edge-adjacent pairs, pairwise disjoint and
  /// cover every cell.
  bool is_tiling(const Tiling& t) const;

 private:
  std::optional<int> find_by_vertices(std::array<LatticePoint, 3> v) const;
  std::vector<int> mirror(LatticePoint (*map)(LatticePoint, const HexSpec&)) const;

  HexSpec spec_;
  std::vector<Triangle> cells_;
  std::vector<std::array<int, 3>> neighbors_;
  std::optional<Lozenge> central_;
  std::optional<std::vector<int>> vertical_mirror_;
  std::optional<std::vector<int>> horizontal_mirror_;
};

HexRegion hex_region(long a, long b, long c);

std::optional<Lozenge> central_lozenge(long a, long b, long c);

}  // namespace hexcensus
