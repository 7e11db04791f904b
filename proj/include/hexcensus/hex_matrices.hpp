#pragma once

// Counting matrices whose Pfaffians give the number of centered vertically
// symmetric tilings: M(x) for the (2n+1, 2x, 2n+1) hexagon and N(x) for the
// (2n, 2x+1, 2n) hexagon. Entry functions take 1-based indices i, j.
// Every builder accepts a rational x, extending the entries polynomially.

#include "hexcensus/exact.hpp"
#include "hexcensus/pfaffian.hpp"

namespace hexcensus {

/// binom(2x+2n+1, i) * (binom(x+n, j) + binom(x+n+1, j)).
ExactRational t_entry(long i, long j, long n, const ExactRational& x);

/// Polynomial form of the R kernel, valid at every rational x.
ExactRational r_entry_poly(long i, long j, long n, const ExactRational& x);

/// Summation form of the R kernel at integer x. The sum over
/// t = 1..2x+2n+1 is read as a signed sum when the upper limit is below 1.
ExactRational r_entry_sum(long i, long j, long n, long x);

/// Same, for a rational argument; throws DomainError unless x is an integer.
ExactRational r_entry_sum(long i, long j, long n, const ExactRational& x);

/// Entry (i, j) of M(x), 1 <= i, j <= 2n+2.
ExactRational m_entry(long i, long j, long n, const ExactRational& x);

/// Entry (i, j) of N(x), 1 <= i, j <= 2n+2 (n >= 1).
ExactRational n_entry(long i, long j, long n, const ExactRational& x);

/// M(x), size 2n+2.
SkewMatrix build_M(long n, const ExactRational& x);

/// N(x), size 2n+2; n >= 1.
SkewMatrix build_N(long n, const ExactRational& x);

}  // namespace hexcensus
