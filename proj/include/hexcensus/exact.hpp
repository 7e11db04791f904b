#pragma once

// Exact integers and rationals plus the combinatorial primitives used by
// every counting formula. Both number types are GMP values, so arithmetic
// never overflows and rationals are kept canonical (lowest terms, positive
// denominator) by every operator.

#include <gmpxx.h>

#include <functional>
#include <span>
#include <string>
#include <string_view>

namespace hexcensus {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

/// Builds num/den in lowest terms. Throws DomainError when den == 0.
ExactRational make_rational(const ExactInt& num, const ExactInt& den);

/// Parses a decimal integer with optional leading '-'.
ExactInt parse_int(std::string_view text);

/// Parses "p" or "p/q".
ExactRational parse_rational(std::string_view text);

std::string to_string(const ExactInt& value);
std::string to_string(const ExactRational& value);

bool is_integer(const ExactRational& value);

/// Returns the integer value of a rational that must be integral; throws
/// IntegralityError naming `what` otherwise.
ExactInt require_integer(const ExactRational& value, std::string_view what);

/// True iff num/den of `value` share no common factor and den > 0.
bool is_canonical(const ExactRational& value);

ExactInt factorial(long k);

/// k!! with (-1)!! = 0!! = 1.
ExactInt double_factorial(long k);

/// Rising factorial a(a+1)...(a+k-1), with (a)_0 = 1.
ExactRational pochhammer(const ExactRational& a, long k);

/// Generalized binomial r(r-1)...(r-k+1)/k!; zero for k < 0.
ExactRational binomial(const ExactRational& r, long k);

/// Integer binomial with the same conventions as the rational overload
/// (upper argument may be negative).
ExactInt binomial(long n, long k);

/// 2^e for any integer e.
ExactRational power_of_two(long e);

/// (-1)^e.
inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

using Evaluator = std::function<ExactRational(const ExactRational&)>;

/// Checks f(p) == g(p) at every point. When both f and g are polynomials of
/// degree at most `degree_bound`, a true result certifies f == g. Throws
/// ArgumentError if there are fewer than degree_bound + 1 points or if the
/// points are not pairwise distinct.
bool poly_identity_check(const Evaluator& f, const Evaluator& g,
                         int degree_bound,
                         std::span<const ExactRational> points);

}  // namespace hexcensus
