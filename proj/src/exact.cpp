#include "hexcensus/exact.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "hexcensus/errors.hpp"

namespace hexcensus {

ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactInt parse_int(std::string_view text) {
  std::string s(text);
  bool ok = !s.empty();
  for (std::size_t i = 0; ok && i < s.size(); ++i) {
    const bool leading_minus = (i == 0 && s[i] == '-' && s.size() > 1);
    ok = leading_minus || std::isdigit(static_cast<unsigned char>(s[i]));
  }
  if (!ok) throw ArgumentError("not a decimal integer: '" + s + "'");
  return ExactInt(s, 10);
}

ExactRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)),
                       parse_int(text.substr(slash + 1)));
}

std::string to_string(const ExactInt& value) { return value.get_str(10); }

std::string to_string(const ExactRational& value) {
  return value.get_str(10);
}

bool is_integer(const ExactRational& value) {
  return value.get_den() == 1;
}

ExactInt require_integer(const ExactRational& value, std::string_view what) {
  if (!is_integer(value)) {
    throw IntegralityError(std::string(what) + " is not an integer: " +
                           to_string(value));
  }
  return value.get_num();
}

bool is_canonical(const ExactRational& value) {
  if (value.get_den() <= 0) return false;
  ExactInt g;
  mpz_gcd(g.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return g == 1;
}

ExactInt factorial(long k) {
  if (k < 0) throw DomainError("factorial of negative integer");
  ExactInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

ExactInt double_factorial(long k) {
  if (k < -1) throw DomainError("double factorial below -1");
  if (k <= 0) return 1;
  ExactInt out;
  mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

ExactRational pochhammer(const ExactRational& a, long k) {
  if (k < 0) throw DomainError("Pochhammer symbol with negative length");
  ExactRational out = 1;
  ExactRational term = a;
  for (long i = 0; i < k; ++i) {
    out *= term;
    term += 1;
  }
  return out;
}

ExactRational binomial(const ExactRational& r, long k) {
  if (k < 0) return 0;
  ExactRational num = 1;
  ExactRational term = r;
  for (long i = 0; i < k; ++i) {
    num *= term;
    term -= 1;
  }
  return num / ExactRational(factorial(k));
}

ExactInt binomial(long n, long k) {
  if (k < 0) return 0;
  ExactInt out;
  if (n >= 0) {
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
  } else {
    // binom(n, k) = (-1)^k binom(k - n - 1, k) for n < 0.
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(k - n - 1),
                 static_cast<unsigned long>(k));
    if (k % 2 != 0) out = -out;
  }
  return out;
}

ExactRational power_of_two(long e) {
  ExactInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? ExactRational(p) : make_rational(1, p);
}

bool poly_identity_check(const Evaluator& f, const Evaluator& g,
                         int degree_bound,
                         std::span<const ExactRational> points) {
  if (degree_bound < 0) throw ArgumentError("negative degree bound");
  if (points.size() < static_cast<std::size_t>(degree_bound) + 1) {
    throw ArgumentError("need at least degree_bound + 1 points, got " +
                        std::to_string(points.size()));
  }
  std::vector<ExactRational> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("interpolation points are not pairwise distinct");
  }
  return std::all_of(points.begin(), points.end(),
                     [&](const ExactRational& p) { return f(p) == g(p); });
}

}  // namespace hexcensus
