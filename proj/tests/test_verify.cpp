#include <doctest.h>

#include "hexcensus/errors.hpp"
#include "hexcensus/verify.hpp"

using namespace hexcensus;

namespace {

VerifyOptions small() {
  VerifyOptions o;
  o.max_n = 1;
  o.max_x = 2;
  return o;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("every suite passes on the real formulas") {
  for (const std::string& name : suite_names()) {
    if (name == "all") continue;
    const VerifyOutcome v = run_suite(name, small());
    INFO(name);
    CHECK(v.ok());
    CHECK(v.cases > 0);
    CHECK(v.suite == name);
  }
}

TEST_CASE("unknown suites and negative bounds are rejected") {
  CHECK_THROWS_AS(run_suite("nope"), ArgumentError);
  VerifyOptions o;
  o.max_n = -1;
  CHECK_THROWS_AS(run_suite("core", o), ArgumentError);
}

TEST_CASE("a perturbed Q is caught") {
  VerifyOptions o = small();
  o.formulas.q_factor = [](long n, long x) {
    ExactRational q = q_factor(n, x);
    if (n == 2 && x == 1) q *= ExactRational(36, 35);
    return q;
  };
  const VerifyOutcome v = run_suite("theorems", o);
  CHECK_FALSE(v.ok());
  bool named = false;
  for (const VerifyFailure& f : v.failures) named = named || f.check == "pf-M-equals-Q-times-ST";
  CHECK(named);
}

TEST_CASE("a perturbed R is caught by the theorem and asymptotic suites") {
  VerifyOptions o = small();
  o.formulas.r_factor = [](long n, long x) { return ExactRational(r_factor(n, x) * 1001 / 1000); };
  CHECK_FALSE(run_suite("theorems", o).ok());
  CHECK_FALSE(run_suite("asympt", o).ok());
}

TEST_CASE("a perturbed T is caught by the oracle") {
  VerifyOptions o = small();
  o.formulas.count_T = [](long a, long b, long c) {
    ExactInt t = count_T(a, b, c);
    if (a == 2 && b == 2 && c == 2) t += 1;
    return t;
  };
  const VerifyOutcome v = run_suite("oracle", o);
  CHECK_FALSE(v.ok());
  CHECK(v.failures.front().expected == "21");
  CHECK(v.failures.front().actual == "20");
}

TEST_CASE("a perturbed centered count is caught through the 'all' suite") {
  VerifyOptions o = small();
  o.formulas.centered_sym_count = [](long a, long b) {
    return ExactInt(centered_sym_count(a, b) + (a == 3 && b == 2 ? 1 : 0));
  };
  const VerifyOutcome v = run_suite("all", o);
  CHECK_FALSE(v.ok());
  for (const VerifyFailure& f : v.failures) CHECK(f.check.find('/') != std::string::npos);
}

TEST_CASE("formula exceptions become failures, not crashes") {
  VerifyOptions o = small();
  o.formulas.count_ST = [](long, long) -> ExactInt { throw IntegralityError("broken"); };
  const VerifyOutcome v = run_suite("theorems", o);
  CHECK_FALSE(v.ok());
}

TEST_CASE("one-third arbitration") {
  const OneThirdArbitration arb = arbitrate_one_third({1, 2}, 1);
  CHECK_FALSE(arb.printed_is_one_third);
  CHECK(arb.shifted_is_one_third);
  CHECK(arb.oracle_agrees);
  CHECK(arb.consistent());
  CHECK(arb.printed[0].formula_ratio == ExactRational(17, 35));
  CHECK(arb.printed[0].oracle_ratio == ExactRational(17, 35));
  CHECK(arb.shifted[0].oracle_ratio == ExactRational(1, 3));
  CHECK(arb.shifted[1].formula_ratio == ExactRational(1, 3));
  CHECK_FALSE(arb.shifted[1].has_oracle);
  CHECK(arb.summary().find("(2n+1,2n+2,2n+1)") != std::string::npos);
}

TEST_CASE("arbitration notices a formula that disagrees with the oracle") {
  FormulaSet f;
  f.centered_count = [](long a, long b) { return ExactInt(count_T(a, b, a) / 3); };
  const OneThirdArbitration arb = arbitrate_one_third({1}, 1, f);
  CHECK_FALSE(arb.oracle_agrees);
  CHECK_FALSE(arb.consistent());
}

}  // TEST_SUITE
