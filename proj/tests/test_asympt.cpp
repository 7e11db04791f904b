#include <doctest.h>

#include <cmath>

#include "hexcensus/asympt.hpp"
#include "hexcensus/errors.hpp"
#include "hexcensus/formulas.hpp"

using namespace hexcensus;

TEST_SUITE("asympt") {

TEST_CASE("arcsine targets") {
  CHECK(arcsin_prob(0) == doctest::Approx(1.0));
  CHECK(arcsin_prob(1) == doctest::Approx(1.0 / 3));
  CHECK(arcsin_prob(3) == doctest::Approx(0.16086).epsilon(1e-4));
  CHECK_THROWS_AS(arcsin_prob(-0.5), DomainError);
}

TEST_CASE("float R matches the exact value") {
  CHECK(r_float(1, 0) == doctest::Approx(0.5).epsilon(1e-12));
  for (long n = 1; n <= 8; ++n)
    for (long x = 0; x <= 8; ++x) {
      const double exact = r_factor(n, x).get_d();
      CHECK(std::abs(r_float(n, x) - exact) <= 1e-9 * exact);
    }
  CHECK_THROWS_AS(r_float(0, 1), DomainError);
}

TEST_CASE("approach to the arcsine law") {
  // Errors from tests/oracles/frozen_values.py (exact rational R).
  const AsymptReport one = asympt_report(1, {20, 40, 80});
  CHECK(one.target == doctest::Approx(1.0 / 3));
  CHECK(one.monotone_approach);
  CHECK(one.abs_errors[0] == doctest::Approx(1.4925021593920063e-4).epsilon(1e-6));
  CHECK(one.abs_errors[2] == doctest::Approx(9.511574445564275e-6).epsilon(1e-5));
  const AsymptReport two = asympt_report(2, {20, 40, 80});
  CHECK(two.monotone_approach);
  CHECK(two.abs_errors[1] == doctest::Approx(4.500492272508927e-4).epsilon(1e-6));
  CHECK(two.max_abs_error < 0.02);
  CHECK(std::abs(r_float(80, 80) - 1.0 / 3) < 0.02);
  CHECK(asympt_report(1, {80, 40}).monotone_approach == false);
  CHECK_THROWS_AS(asympt_report(1, {}), ArgumentError);
}

TEST_CASE("limit lemma") {
  CHECK(closed_rhs(3) == doctest::Approx(1.305630).epsilon(1e-5));
  CHECK(std::abs(closed_rhs(1.0001) - 1) < 1e-2);
  for (double b = 1.5; b <= 10; b += 0.5) CHECK(closed_rhs(b) > 0);
  CHECK(lemma_limit_lhs(200, 3, 0) == doctest::Approx(1.305170).epsilon(1e-5));
  CHECK(lemma_limit_lhs(200, 3, 2) == doctest::Approx(1.305871).epsilon(1e-5));
  CHECK(lemma_limit_lhs(200, 2, 1) == doctest::Approx(1.209851).epsilon(1e-5));
  for (long n : {1, 3, 50, 200}) CHECK(f_summand(n, 0, 3, 2) == 1.0);
  const double growth =
      f_summand(200, 199, 3, 0) / (std::sqrt(std::acos(-1.0) / 2) * 0.75 * std::sqrt(200.0));
  CHECK(std::abs(growth - 1) < 0.05);
  CHECK_THROWS_AS(closed_rhs(1), DomainError);
  CHECK_THROWS_AS(lemma_limit_lhs(10, -0.5, 0), DomainError);
  CHECK_THROWS_AS(f_summand(5, 5, 3, 0), DomainError);
}

}  // TEST_SUITE
