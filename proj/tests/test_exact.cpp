#include <doctest.h>

#include <vector>

#include "hexcensus/errors.hpp"
#include "hexcensus/exact.hpp"

using namespace hexcensus;

TEST_SUITE("exact") {

TEST_CASE("rationals are built and printed in lowest terms") {
  const ExactRational q = make_rational(6, -4);
  CHECK(to_string(q) == "-3/2");
  CHECK(is_canonical(q));
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("parsing") {
  CHECK(parse_int("-120") == -120);
  CHECK(parse_rational("10/4") == ExactRational(5, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_int("12a"), ArgumentError);
  CHECK_THROWS_AS(parse_int(""), ArgumentError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
}

TEST_CASE("integrality") {
  CHECK(require_integer(make_rational(12, 4), "x") == 3);
  CHECK_THROWS_AS(require_integer(ExactRational(1, 3), "x"), IntegralityError);
  CHECK(is_integer(ExactRational(-8)));
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(to_string(factorial(25)) == "15511210043330985984000000");
  CHECK_THROWS_AS(factorial(-1), DomainError);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(8) == 384);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(ExactRational(3), 0) == 1);
  CHECK(pochhammer(ExactRational(3), 4) == 360);
  CHECK(pochhammer(ExactRational(1, 2), 3) == ExactRational(15, 8));
  CHECK(pochhammer(ExactRational(-2), 3) == 0);
  CHECK_THROWS_AS(pochhammer(ExactRational(1), -1), DomainError);
}

TEST_CASE("binomials") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  // Upper argument below zero: (-1)^k binom(k - n - 1, k).
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(-1, 5) == -1);
  CHECK(binomial(ExactRational(1, 2), 2) == ExactRational(-1, 8));
  CHECK(binomial(ExactRational(-3), 2) == 6);
  CHECK(binomial(ExactRational(7, 3), -2) == 0);
}

TEST_CASE("powers") {
  CHECK(power_of_two(10) == 1024);
  CHECK(power_of_two(-3) == ExactRational(1, 8));
  CHECK(sign_power(-3) == -1);
  CHECK(sign_power(4) == 1);
}

TEST_CASE("poly_identity_check") {
  const Evaluator f = [](const ExactRational& x) { return ExactRational(x * x * x - x); };
  const Evaluator g = [](const ExactRational& x) { return ExactRational((x - 1) * x * (x + 1)); };
  const Evaluator h = [](const ExactRational& x) { return ExactRational(x * x * x); };
  std::vector<ExactRational> pts{ExactRational(-2), ExactRational(1, 3), ExactRational(5),
                                 ExactRational(7, 2)};
  CHECK(poly_identity_check(f, g, 3, pts));
  CHECK_FALSE(poly_identity_check(f, h, 3, pts));
  CHECK_THROWS_AS(poly_identity_check(f, g, 4, pts), ArgumentError);
  pts[1] = pts[0];
  CHECK_THROWS_AS(poly_identity_check(f, g, 3, pts), ArgumentError);
}

}  // TEST_SUITE
