#pragma once

// Closed-form tiling counts for (a,b,c) hexagons: all tilings, vertically
// symmetric tilings, centered tilings, and centered vertically symmetric
// tilings, together with the correction factors that relate them.
//
// Every function returning a count evaluates the product exactly and
// throws IntegralityError if the result is not an integer.

#include <cstdint>

#include "hexcensus/exact.hpp"

namespace hexcensus {

/// Side lengths a,b,c,a,b,c clockwise from the south-western side; the
/// b-sides are vertical.
struct HexSpec {
  long a = 0;
  long b = 0;
  long c = 0;
  friend bool operator==(const HexSpec&, const HexSpec&) = default;
};

/// Number of lozenge tilings of the (a,b,c) hexagon (plane partitions in an
/// a x b x c box).
ExactInt count_T(long a, long b, long c);

/// Number of vertically symmetric tilings of the (a,b,a) hexagon.
ExactInt count_ST(long a, long b);

/// Ratio of centered tilings to all tilings; n >= 1, x >= 0.
ExactRational q_factor(long n, long x);

/// The polynomial U_n(x) (n >= 1) that carries the x-dependence of the
/// centered-symmetric ratio for even a.
ExactRational u_poly(long n, const ExactRational& x);

/// Ratio of centered vertically symmetric to vertically symmetric tilings of
/// the (2n, 2x+1, 2n) hexagon; n >= 1, x >= 0.
ExactRational r_factor(long n, long x);

/// Centered tilings of the (a,b,a) hexagon. a and b must have opposite
/// parity and a >= 1.
ExactInt centered_count(long a, long b);

/// Centered vertically symmetric tilings of the (a,b,a) hexagon, same
/// preconditions as centered_count.
ExactInt centered_sym_count(long a, long b);

ExactRational prob_centered(long a, long b);
ExactRational prob_centered_sym(long a, long b);

/// Product form of the centered vertically symmetric count for the
/// (2n+1, 2x, 2n+1) hexagon, valid as a polynomial at any rational x.
ExactRational pf_m_closed_form(long n, const ExactRational& x);

/// Product form of the centered vertically symmetric count for the
/// (2n, 2x+1, 2n) hexagon, valid as a polynomial at any rational x (n >= 1).
ExactRational pf_n_closed_form(long n, const ExactRational& x);

/// Enumerates the (2n+1, 2x, 2n+1) hexagon and checks that its centered
/// tilings factor as (centered vertically symmetric) x (centered
/// horizontally symmetric). Throws ResourceError above `budget` tilings.
bool factorization_check(long n, long x, std::uint64_t budget = 10'000'000);

}  // namespace hexcensus
