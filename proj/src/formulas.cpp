#include "hexcensus/formulas.hpp"

#include <string>
#include <vector>

#include "hexcensus/census.hpp"
#include "hexcensus/errors.hpp"

namespace hexcensus {

namespace {

void require_nonnegative(long v, const char* what) {
  if (v < 0) throw DomainError(std::string(what) + " must be nonnegative");
}

// Half size n and half height x of an (a, b, a) hexagon with a central
// rhombus: a = 2n+1, b = 2x (odd a) or a = 2n, b = 2x+1 (even a).
struct CenteredShape {
  bool odd_a;
  long n;
  long x;
};

CenteredShape centered_shape(long a, long b) {
  require_nonnegative(a, "a");
  require_nonnegative(b, "b");
  if ((a + b) % 2 == 0) {
    throw DomainError("(" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(a) +
                      ") hexagon has no central rhombus: a and b have the "
                      "same parity");
  }
  if (a % 2 == 1) return {true, (a - 1) / 2, b / 2};
  if (a < 2) throw DomainError("centered count needs a >= 1");
  return {false, a / 2, (b - 1) / 2};
}

ExactRational fact_q(long k) { return ExactRational(factorial(k)); }

}  // namespace

ExactInt count_T(long a, long b, long c) {
  require_nonnegative(a, "a");
  require_nonnegative(b, "b");
  require_nonnegative(c, "c");
  // Each factor depends only on m = i+j+k; collect multiplicities first.
  std::vector<long> mult(static_cast<std::size_t>(a + b + c + 1), 0);
  for (long i = 1; i <= a; ++i)
    for (long j = 1; j <= b; ++j)
      for (long k = 1; k <= c; ++k) ++mult[static_cast<std::size_t>(i + j + k)];
  ExactInt num = 1;
  ExactInt den = 1;
  for (std::size_t m = 3; m < mult.size(); ++m) {
    if (mult[m] == 0) continue;
    ExactInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), m - 1, static_cast<unsigned long>(mult[m]));
    num *= p;
    mpz_ui_pow_ui(p.get_mpz_t(), m - 2, static_cast<unsigned long>(mult[m]));
    den *= p;
  }
  return require_integer(make_rational(num, den), "T(a,b,c)");
}

ExactInt count_ST(long a, long b) {
  require_nonnegative(a, "a");
  require_nonnegative(b, "b");
  ExactInt num = 1;
  ExactInt den = 1;
  for (long i = 1; i <= a; ++i) {
    num *= 2 * i + b - 1;
    den *= 2 * i - 1;
    for (long j = i + 1; j <= a; ++j) {
      num *= i + j + b - 1;
      den *= i + j - 1;
    }
  }
  return require_integer(make_rational(num, den), "ST(a,b,a)");
}

ExactRational q_factor(long n, long x) {
  if (n < 1) throw DomainError("Q(n,x) requires n >= 1");
  require_nonnegative(x, "x");
  const ExactRational prefactor =
      ExactRational(1, 2) * fact_q(2 * n) * fact_q(2 * n) * fact_q(2 * x) *
      fact_q(x + 2 * n - 1) /
      (fact_q(n) * fact_q(n) * fact_q(x) * fact_q(2 * x + 4 * n - 2));
  ExactRational sum = 0;
  for (long i = 0; i <= n - 1; ++i) {
    sum += ExactRational(sign_power(n - i - 1), 2 * n - 2 * i - 1) *
           pochhammer(ExactRational(x + n - i), 2 * i) / (fact_q(i) * fact_q(i));
  }
  return prefactor * sum;
}

ExactRational u_poly(long n, const ExactRational& x) {
  if (n < 1) throw DomainError("U_n(x) requires n >= 1");
  const ExactInt odd_df = double_factorial(2 * n - 1);
  const ExactInt even_df = double_factorial(2 * n);
  ExactRational sum = 0;
  for (long i = 1; i <= n; ++i) {
    const ExactRational weight =
        ExactRational(odd_df + sign_power(i + 1) * even_df) *
        pochhammer(ExactRational(3, 2) - i, 2 * n - 1) /
        (fact_q(i - 1) * fact_q(2 * n - i));
    const ExactRational difference =
        pochhammer(x + 1, i - 1) * pochhammer(x + i + 1, 2 * n - i) -
        pochhammer(x + 1, 2 * n - i) * pochhammer(x + 2 * n + 2 - i, i - 1);
    sum += weight * difference;
  }
  return sum;
}

ExactRational r_factor(long n, long x) {
  if (n < 1) throw DomainError("R(n,x) requires n >= 1");
  require_nonnegative(x, "x");
  const ExactRational prefactor =
      power_of_two(3 * n - 2) * fact_q(2 * x + 2) * fact_q(x + 2 * n) /
      (fact_q(n) * fact_q(x + 1) * fact_q(2 * x + 4 * n));
  return prefactor * u_poly(n, ExactRational(x));
}

ExactInt centered_count(long a, long b) {
  const CenteredShape s = centered_shape(a, b);
  const ExactRational ratio =
      s.odd_a ? q_factor(s.n + 1, s.x) : q_factor(s.n, s.x + 1);
  return require_integer(ratio * ExactRational(count_T(a, b, a)),
                         "centered tiling count");
}

ExactInt centered_sym_count(long a, long b) {
  const CenteredShape s = centered_shape(a, b);
  const ExactRational ratio =
      s.odd_a ? q_factor(s.n + 1, s.x) : r_factor(s.n, s.x);
  return require_integer(ratio * ExactRational(count_ST(a, b)),
                         "centered symmetric tiling count");
}

ExactRational prob_centered(long a, long b) {
  return ExactRational(centered_count(a, b)) / ExactRational(count_T(a, b, a));
}

ExactRational prob_centered_sym(long a, long b) {
  return ExactRational(centered_sym_count(a, b)) /
         ExactRational(count_ST(a, b));
}

ExactRational pf_m_closed_form(long n, const ExactRational& x) {
  require_nonnegative(n, "n");
  ExactRational value = ExactRational(1, 4) * fact_q(2 * n + 2) *
                        fact_q(2 * n + 2) * fact_q(2 * n) /
                        (fact_q(n + 1) * fact_q(n + 1) * fact_q(4 * n + 1));
  for (long s = 1; s <= n; ++s) {
    const long len = 4 * n - 4 * s + 3;
    value *= pochhammer(2 * x + 2 * s, len) / pochhammer(ExactRational(2 * s), len);
  }
  ExactRational sum = 0;
  for (long i = 0; i <= n; ++i) {
    sum += ExactRational(sign_power(n - i), 2 * n + 1 - 2 * i) *
           pochhammer(x + n + 1 - i, 2 * i) / (fact_q(i) * fact_q(i));
  }
  return value * sum;
}

ExactRational pf_n_closed_form(long n, const ExactRational& x) {
  if (n < 1) throw DomainError("Pf N(x) requires n >= 1");
  ExactRational value = power_of_two(5 * n - 1) / (fact_q(n) * fact_q(4 * n)) *
                        pochhammer(x + 1, 2 * n);
  for (long s = 2; s <= n; ++s) {
    const long len = 4 * n - 4 * s + 3;
    value *= pochhammer(2 * x + 2 * s, len) / pochhammer(ExactRational(2 * s), len);
  }
  return value * u_poly(n, x);
}

bool factorization_check(long n, long x, std::uint64_t budget) {
  require_nonnegative(n, "n");
  if (x < 1) throw DomainError("factorization check requires x >= 1");
  const TilingCensus c = census(HexSpec{2 * n + 1, 2 * x, 2 * n + 1},
                                CensusOptions{.budget = budget});
  return c.centered && c.centered_vsym && c.centered_hsym &&
         *c.centered == *c.centered_vsym * *c.centered_hsym;
}

}  // namespace hexcensus
