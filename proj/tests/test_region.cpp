#include <doctest.h>

#include <set>

#include "hexcensus/census.hpp"
#include "hexcensus/errors.hpp"
#include "hexcensus/region.hpp"

using namespace hexcensus;

TEST_SUITE("region") {

TEST_CASE("cell counts") {
  CHECK(hex_region(1, 1, 1).size() == 6);
  CHECK(hex_region(3, 2, 3).size() == 42);
  CHECK(hex_region(2, 0, 3).size() == 12);
  CHECK(hex_region(2, 3, 4).size() == 2 * (6 + 12 + 8));
  CHECK_THROWS_AS(hex_region(0, 0, 0), DomainError);
  CHECK_THROWS_AS(hex_region(1, -1, 1), DomainError);
}

TEST_CASE("left and right triangles are equinumerous") {
  const HexRegion r = hex_region(3, 4, 2);
  long left = 0;
  for (const Triangle& t : r.cells()) left += t.kind == TriangleKind::kLeft;
  CHECK(2 * left == long(r.size()));
}

TEST_CASE("central lozenge exists iff a == c and a, b have opposite parity") {
  CHECK(central_lozenge(3, 2, 3).has_value());
  CHECK(central_lozenge(4, 5, 4).has_value());
  CHECK(central_lozenge(1, 0, 1).has_value());
  CHECK_FALSE(central_lozenge(3, 3, 3).has_value());
  CHECK_FALSE(central_lozenge(2, 2, 2).has_value());
  CHECK_FALSE(central_lozenge(3, 2, 1).has_value());
}

TEST_CASE("central lozenge is fixed by both mirrors") {
  for (auto [a, b] : {std::pair{3L, 2L}, std::pair{4L, 5L}, std::pair{2L, 1L}}) {
    const HexRegion r = hex_region(a, b, a);
    const Lozenge z = *r.central_lozenge();
    const auto& v = *r.vertical_mirror();
    const auto& h = *r.horizontal_mirror();
    CHECK(std::set<int>{v[z.right], v[z.left]} == std::set<int>{z.right, z.left});
    CHECK(std::set<int>{h[z.right], h[z.left]} == std::set<int>{z.right, z.left});
  }
}

TEST_CASE("mirrors are involutions; only the vertical one swaps triangle kinds") {
  const HexRegion r = hex_region(3, 4, 3);
  const auto& v = *r.vertical_mirror();
  const auto& h = *r.horizontal_mirror();
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK(v[v[i]] == int(i));
    CHECK(h[h[i]] == int(i));
    CHECK(r.cells()[v[i]].kind != r.cells()[i].kind);
    CHECK(r.cells()[h[i]].kind == r.cells()[i].kind);
  }
  CHECK_FALSE(hex_region(3, 2, 2).vertical_mirror().has_value());
}

TEST_CASE("neighbours are symmetric") {
  const HexRegion r = hex_region(2, 3, 2);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (int t = 0; t < 3; ++t) {
      const int j = r.neighbors(int(i))[t];
      if (j == kNoNeighbor) continue;
      CHECK(r.neighbors(j)[t] == int(i));
    }
}

TEST_CASE("enumerated tilings are tilings and cover every lozenge type evenly") {
  const HexRegion r = hex_region(2, 2, 2);
  long count = 0;
  for_each_tiling(r, [&](const Tiling& t) {
    ++count;
    CHECK(r.is_tiling(t));
    std::array<int, 3> by_type{};
    for (const Lozenge& z : t.lozenges) ++by_type[static_cast<int>(r.type_of(z))];
    // A tiling of the (a,b,c) hexagon uses ab, bc and ca lozenges of the
    // three types.
    std::multiset<int> seen(by_type.begin(), by_type.end());
    CHECK(seen == std::multiset<int>{4, 4, 4});
  });
  CHECK(count == 20);
}

TEST_CASE("is_tiling rejects overlaps and gaps") {
  const HexRegion r = hex_region(1, 1, 1);
  Tiling first;
  for_each_tiling(r, [&](const Tiling& t) {
    if (first.lozenges.empty()) first = t;
  });
  Tiling gap = first;
  gap.lozenges.pop_back();
  CHECK_FALSE(r.is_tiling(gap));
  Tiling twice = first;
  twice.lozenges.back() = twice.lozenges.front();
  CHECK_FALSE(r.is_tiling(twice));
}

}  // TEST_SUITE
