#include <doctest.h>

#include "hexcensus/errors.hpp"
#include "hexcensus/hex_matrices.hpp"
#include "hexcensus/paths.hpp"

using namespace hexcensus;

TEST_SUITE("paths") {

TEST_CASE("h_count") {
  CHECK(h_count({2, 2}, {2, 2}) == 1);
  CHECK(h_count({-3, 3}, {-1, 4}) == 3);
  CHECK(h_count({0, 0}, {-1, 4}) == 0);
  CHECK(h_count({0, 5}, {3, 4}) == 0);
}

TEST_CASE("weighted path sums") {
  PathConfig c;
  CHECK(h_weighted(c, {0, 0}, {2, 2}) == 6);
  c.edge_weights[Edge{{0, 0}, Step::kRight}] = -1;
  // Paths starting with a right step count -1: 3 up-first minus 3.
  CHECK(h_weighted(c, {0, 0}, {2, 2}) == 0);
  c.endpoint_weights[{1, 1}] = ExactRational(1, 2);
  CHECK(h_weighted(c, {0, 0}, {1, 1}) == 0);
  CHECK(h_weighted(c, {0, 1}, {1, 1}) == ExactRational(1, 2));
}

TEST_CASE("single start, single forced end") {
  PathConfig c;
  c.starts = {{0, 0}};
  c.forced = {{2, 3}};
  CHECK(stembridge_pf(c) == 10);
  CHECK(signed_enumeration(c) == 10);
}

TEST_CASE("two starts, free ends") {
  PathConfig c;
  c.starts = {{0, 0}, {-1, 1}};
  c.free_ends = {{2, 0}, {2, 1}, {2, 2}};
  CHECK(stembridge_pf(c) == signed_enumeration(c));
  CHECK(stembridge_pf(c) != 0);
}

TEST_CASE("odd p + q needs a phantom vertex") {
  PathConfig c;
  c.starts = {{0, 0}, {1, 0}};
  c.forced = {{3, 3}};
  CHECK_THROWS_AS(stembridge_pf(c), ArgumentError);
}

TEST_CASE("search budget") {
  const PathConfig c = centered_sym_path_config(1, 2, Parity::kOdd, SignScheme::kEndpoint);
  CHECK_THROWS_AS(signed_enumeration(c, 10), ResourceError);
  CHECK_THROWS_AS(sym_path_census(2, 2, Parity::kOdd, 10), ResourceError);
}

TEST_CASE("symmetric path families") {
  CHECK(sym_path_census(0, 1, Parity::kOdd) == 1);
  CHECK(sym_path_census(1, 1, Parity::kOdd) == 17);
  CHECK(sym_path_census(1, 0, Parity::kEven) == 2);
  CHECK(sym_path_census(2, 2, Parity::kOdd) == 11814);
  CHECK_THROWS_AS(sym_path_census(0, 1, Parity::kEven), DomainError);
}

TEST_CASE("Pfaffian of the path configuration reproduces the counting matrices") {
  for (SignScheme scheme : {SignScheme::kEndpoint, SignScheme::kEdge}) {
    for (long n = 0; n <= 2; ++n)
      for (long x = 0; x <= 2; ++x) {
        CHECK(stembridge_pf(centered_sym_path_config(n, x, Parity::kOdd, scheme)) ==
              pf(build_M(n, x)));
        if (n >= 1) {
          CHECK(stembridge_pf(centered_sym_path_config(n, x, Parity::kEven, scheme)) ==
                pf(build_N(n, x)));
        }
      }
  }
}

TEST_CASE("signed enumeration of the path configuration") {
  for (SignScheme scheme : {SignScheme::kEndpoint, SignScheme::kEdge}) {
    const PathConfig odd = centered_sym_path_config(1, 1, Parity::kOdd, scheme);
    CHECK(signed_enumeration(odd) == 17);
    const PathConfig even = centered_sym_path_config(1, 1, Parity::kEven, scheme);
    CHECK(signed_enumeration(even) == 6);
  }
}

}  // TEST_SUITE
