#include "hexcensus/region.hpp"

#include <algorithm>
#include <map>

#include "hexcensus/errors.hpp"

namespace hexcensus {

std::array<LatticePoint, 3> Triangle::vertices() const {
  if (kind == TriangleKind::kRight) {
    return {LatticePoint{col, row}, LatticePoint{col, row + 1},
            LatticePoint{col + 1, row + 1}};
  }
  return {LatticePoint{col, row}, LatticePoint{col + 1, row},
          LatticePoint{col + 1, row + 1}};
}

namespace {

LatticePoint reflect_vertical(LatticePoint p, const HexSpec& s) {
  return {2 * s.a - p.col, p.row + s.a - p.col};
}

LatticePoint reflect_horizontal(LatticePoint p, const HexSpec& s) {
  return {p.col, s.b + p.col - p.row};
}

// Doubled coordinates of the midpoint of the edge shared by the two cells
// of a lozenge with right-pointing cell `r`.
LatticePoint doubled_center(const Triangle& r, LozengeType type) {
  switch (type) {
    case LozengeType::kVertical:
      return {2 * r.col, 2 * r.row + 1};
    case LozengeType::kRising:
      return {2 * r.col + 1, 2 * r.row + 1};
    case LozengeType::kFalling:
      return {2 * r.col + 1, 2 * r.row + 2};
  }
  return {};
}

Triangle neighbor_cell(const Triangle& t, LozengeType type) {
  const bool right = t.kind == TriangleKind::kRight;
  const TriangleKind other = right ? TriangleKind::kLeft : TriangleKind::kRight;
  switch (type) {
    case LozengeType::kVertical:
      return {right ? t.col - 1 : t.col + 1, t.row, other};
    case LozengeType::kRising:
      return {t.col, t.row, other};
    case LozengeType::kFalling:
      return {t.col, right ? t.row + 1 : t.row - 1, other};
  }
  return t;
}

constexpr std::array<LozengeType, 3> kAllTypes = {
    LozengeType::kVertical, LozengeType::kRising, LozengeType::kFalling};

}  // namespace

HexRegion::HexRegion(HexSpec spec) : spec_(spec) {
  if (spec.a < 0 || spec.b < 0 || spec.c < 0) {
    throw DomainError("hexagon sides must be nonnegative");
  }
  if (spec.a == 0 && spec.b == 0 && spec.c == 0) {
    throw DomainError("hexagon with all sides zero");
  }
  const long width = spec.a + spec.c;
  const long height = spec.b + spec.c;
  for (long col = 0; col < width; ++col) {
    for (long row = 0; row <= height; ++row) {
      for (TriangleKind kind : {TriangleKind::kLeft, TriangleKind::kRight}) {
        Triangle t{col, row, kind};
        const auto v = t.vertices();
        if (std::all_of(v.begin(), v.end(),
                        [&](LatticePoint p) { return contains(p); })) {
          cells_.push_back(t);
        }
      }
    }
  }
  std::sort(cells_.begin(), cells_.end());

  neighbors_.resize(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    for (LozengeType type : kAllTypes) {
      const auto j = index_of(neighbor_cell(cells_[i], type));
      neighbors_[i][static_cast<std::size_t>(type)] = j ? *j : kNoNeighbor;
    }
  }

  // Only a == c hexagons count as having a central rhombus, although any
  // hexagon with a + c even and b + c odd has a lozenge at its centre.
  const LatticePoint center{spec.a + spec.c, spec.b + spec.c};
  for (std::size_t i = 0; spec.a == spec.c && i < cells_.size() && !central_; ++i) {
    if (cells_[i].kind != TriangleKind::kRight) continue;
    for (LozengeType type : kAllTypes) {
      const int j = neighbors_[i][static_cast<std::size_t>(type)];
      if (j != kNoNeighbor && doubled_center(cells_[i], type) == center) {
        central_ = Lozenge{static_cast<int>(i), j};
        break;
      }
    }
  }

  if (spec.a == spec.c) {
    vertical_mirror_ = mirror(&reflect_vertical);
    horizontal_mirror_ = mirror(&reflect_horizontal);
  }
}

bool HexRegion::contains(LatticePoint p) const {
  const long width = spec_.a + spec_.c;
  if (p.col < 0 || p.col > width) return false;
  const long lo = std::max(0L, p.col - spec_.a);
  const long hi = std::min(spec_.b + p.col, spec_.b + spec_.c);
  return p.row >= lo && p.row <= hi;
}

std::optional<int> HexRegion::index_of(const Triangle& t) const {
  const auto it = std::lower_bound(cells_.begin(), cells_.end(), t);
  if (it == cells_.end() || *it != t) return std::nullopt;
  return static_cast<int>(it - cells_.begin());
}

std::optional<int> HexRegion::find_by_vertices(std::array<LatticePoint, 3> v) const {
  std::sort(v.begin(), v.end());
  // The two vertices sharing a column form the vertical edge; the third
  // lies one column right (left-pointing cell) or left (right-pointing).
  const bool left_pair = v[0].col == v[1].col;
  const LatticePoint lo = left_pair ? v[0] : v[1];
  const LatticePoint apex = left_pair ? v[2] : v[0];
  if (left_pair) return index_of(Triangle{lo.col, lo.row, TriangleKind::kRight});
  return index_of(Triangle{apex.col, apex.row, TriangleKind::kLeft});
}

std::vector<int> HexRegion::mirror(
    LatticePoint (*map)(LatticePoint, const HexSpec&)) const {
  std::vector<int> out(cells_.size(), kNoNeighbor);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    auto v = cells_[i].vertices();
    for (auto& p : v) p = map(p, spec_);
    const auto j = find_by_vertices(v);
    if (!j) throw std::logic_error("reflection leaves the region");
    out[i] = *j;
  }
  return out;
}

LozengeType HexRegion::type_of(const Lozenge& z) const {
  for (LozengeType type : kAllTypes) {
    if (neighbors_[static_cast<std::size_t>(z.right)][static_cast<std::size_t>(type)] ==
        z.left) {
      return type;
    }
  }
  throw ArgumentError("cells of lozenge are not adjacent");
}

bool HexRegion::is_tiling(const Tiling& t) const {
  std::vector<char> covered(cells_.size(), 0);
  const int n = static_cast<int>(cells_.size());
  for (const Lozenge& z : t.lozenges) {
    if (z.right < 0 || z.right >= n || z.left < 0 || z.left >= n) return false;
    if (cells_[static_cast<std::size_t>(z.right)].kind != TriangleKind::kRight) return false;
    const auto& nb = neighbors_[static_cast<std::size_t>(z.right)];
    if (std::find(nb.begin(), nb.end(), z.left) == nb.end()) return false;
    for (int c : {z.right, z.left}) {
      if (covered[static_cast<std::size_t>(c)]) return false;
      covered[static_cast<std::size_t>(c)] = 1;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

HexRegion hex_region(long a, long b, long c) { return HexRegion(HexSpec{a, b, c}); }

std::optional<Lozenge> central_lozenge(long a, long b, long c) {
  return HexRegion(HexSpec{a, b, c}).central_lozenge();
}

}  // namespace hexcensus
