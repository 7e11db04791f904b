#include <doctest.h>

#include "hexcensus/errors.hpp"
#include "hexcensus/formulas.hpp"

using namespace hexcensus;

// Reference values from tests/oracles/frozen_values.py.

TEST_SUITE("formulas") {

TEST_CASE("count_T") {
  CHECK(count_T(1, 1, 1) == 2);
  CHECK(count_T(0, 5, 7) == 1);
  CHECK(count_T(2, 2, 2) == 20);
  CHECK(count_T(3, 2, 3) == 175);
  CHECK(count_T(2, 3, 4) == 490);
  CHECK(count_T(4, 4, 4) == 232848);
  CHECK(count_T(5, 4, 5) == 16818516);
  CHECK_THROWS_AS(count_T(-1, 2, 2), DomainError);
}

TEST_CASE("count_T is symmetric in its arguments") {
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b)
      for (long c = 0; c <= 4; ++c) {
        const ExactInt t = count_T(a, b, c);
        CHECK(t == count_T(b, c, a));
        CHECK(t == count_T(c, a, b));
        CHECK(t == count_T(b, a, c));
      }
}

TEST_CASE("count_ST") {
  CHECK(count_ST(4, 0) == 1);
  CHECK(count_ST(2, 1) == 4);
  CHECK(count_ST(3, 2) == 35);
  CHECK(count_ST(3, 4) == 294);
  CHECK(count_ST(4, 3) == 672);
  CHECK(count_ST(5, 4) == 28314);
}

TEST_CASE("q_factor") {
  for (long x = 0; x <= 5; ++x) CHECK(q_factor(1, x) == ExactRational(1, 2 * x + 1));
  CHECK(q_factor(2, 1) == ExactRational(17, 35));
  CHECK(q_factor(3, 1) == ExactRational(131, 231));
  CHECK(q_factor(2, 2) == ExactRational(1, 3));
  CHECK(q_factor(3, 3) == ExactRational(1, 3));
  for (long n = 1; n <= 5; ++n) CHECK(q_factor(n, 0) == 1);
  CHECK_THROWS_AS(q_factor(0, 1), DomainError);
}

TEST_CASE("u_poly and r_factor") {
  CHECK(u_poly(1, ExactRational(0)) == ExactRational(3, 2));
  CHECK_THROWS_AS(u_poly(0, ExactRational(0)), DomainError);
  CHECK(r_factor(1, 0) == ExactRational(1, 2));
  CHECK(r_factor(2, 0) == ExactRational(5, 8));
  CHECK(r_factor(1, 1) == ExactRational(3, 10));
  CHECK(r_factor(2, 3) == ExactRational(895, 3432));
  CHECK(r_factor(3, 2) == ExactRational(901, 2288));
  CHECK_THROWS_AS(r_factor(0, 2), DomainError);
}

TEST_CASE("centered counts") {
  CHECK(centered_count(1, 2) == 1);
  CHECK(centered_count(3, 2) == 85);
  CHECK(centered_count(2, 3) == 10);
  CHECK(centered_count(3, 4) == 1372);
  CHECK(centered_count(4, 3) == 8232);
  CHECK(centered_count(5, 4) == 7017516);
  CHECK(centered_sym_count(1, 2) == 1);
  CHECK(centered_sym_count(3, 2) == 17);
  CHECK(centered_sym_count(2, 1) == 2);
  CHECK(centered_sym_count(2, 3) == 6);
  CHECK(centered_sym_count(4, 3) == 284);
  CHECK(centered_sym_count(5, 4) == 11814);
}

TEST_CASE("flat hexagons (b = 0) have one tiling, which is centered") {
  for (long a : {1, 3, 5}) {
    CHECK(centered_count(a, 0) == 1);
    CHECK(centered_sym_count(a, 0) == 1);
  }
}

TEST_CASE("centered queries need a central rhombus") {
  CHECK_THROWS_AS(centered_count(3, 3), DomainError);
  CHECK_THROWS_AS(centered_sym_count(2, 2), DomainError);
  CHECK_THROWS_AS(centered_count(0, 1), DomainError);
  CHECK_THROWS_AS(prob_centered(4, 4), DomainError);
}

TEST_CASE("probabilities") {
  CHECK(prob_centered(3, 2) == ExactRational(17, 35));
  CHECK(prob_centered_sym(3, 2) == ExactRational(17, 35));
  CHECK(prob_centered(1, 2) == ExactRational(1, 3));
  CHECK(prob_centered_sym(2, 1) == ExactRational(1, 2));
  for (long n = 0; n <= 2; ++n)
    for (long x = 1; x <= 3; ++x)
      CHECK(prob_centered(2 * n + 1, 2 * x) == prob_centered_sym(2 * n + 1, 2 * x));
}

TEST_CASE("product forms agree with the ratio forms at integers") {
  for (long n = 0; n <= 3; ++n)
    for (long x = 1; x <= 4; ++x)
      CHECK(pf_m_closed_form(n, x) == ExactRational(centered_sym_count(2 * n + 1, 2 * x)));
  for (long n = 1; n <= 3; ++n)
    for (long x = 0; x <= 4; ++x)
      CHECK(pf_n_closed_form(n, x) == ExactRational(centered_sym_count(2 * n, 2 * x + 1)));
}

TEST_CASE("factorization_check") {
  CHECK(factorization_check(0, 1));
  CHECK(factorization_check(1, 1));
  CHECK(factorization_check(1, 2));
  CHECK_THROWS_AS(factorization_check(1, 0), DomainError);
  CHECK_THROWS_AS(factorization_check(2, 2, 1000), ResourceError);
}

}  // TEST_SUITE
