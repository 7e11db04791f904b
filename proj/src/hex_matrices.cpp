#include "hexcensus/hex_matrices.hpp"

#include "hexcensus/errors.hpp"

namespace hexcensus {

ExactRational t_entry(long i, long j, long n, const ExactRational& x) {
  return binomial(2 * x + 2 * n + 1, i) *
         (binomial(x + n, j) + binomial(x + n + 1, j));
}

ExactRational r_entry_poly(long i, long j, long n, const ExactRational& x) {
  if (i == j) return 0;
  const ExactRational top = 2 * x + 2 * n + 2;
  ExactRational sum = 0;
  for (long l = 0; l <= i - 1; ++l) {
    sum += ExactRational(binomial(j - 1, i - 1 - l) * binomial(l + j, l)) *
           binomial(top, l + j + 1);
  }
  return make_rational(j - i, i) * sum;
}

ExactRational r_entry_sum(long i, long j, long n, long x) {
  // (j-i)/t binom(t,i) binom(t,j) rewritten without the division so that
  // the t = 0 term of a reversed range is defined.
  auto term = [&](long t) {
    return ExactRational(binomial(t, i) * binomial(t - 1, j - 1) -
                         binomial(t - 1, i - 1) * binomial(t, j));
  };
  // sum_{t=1}^{upper} with upper = 2x+2n+1, i.e. the half-open range
  // [1, upper + 1): empty when upper + 1 == 1, negated reverse when below.
  const long end = 2 * x + 2 * n + 2;
  ExactRational sum = 0;
  if (end > 1) {
    for (long t = 1; t < end; ++t) sum += term(t);
  } else if (end < 1) {
    for (long t = end; t < 1; ++t) sum -= term(t);
  }
  return sum;
}

ExactRational r_entry_sum(long i, long j, long n, const ExactRational& x) {
  if (!is_integer(x)) throw DomainError("summation form of R needs integer x");
  return r_entry_sum(i, j, n, x.get_num().get_si());
}

ExactRational m_entry(long i, long j, long n, const ExactRational& x) {
  const long last = 2 * n + 2;
  if (i < 1 || j < 1 || i > last || j > last) {
    throw ArgumentError("M(x) index out of range");
  }
  if (i == j) return 0;
  if (j == last) return binomial(x + n, i - 1);
  if (i == last) return -binomial(x + n, j - 1);
  return r_entry_poly(i, j, n, x) + t_entry(i, j, n, x) - t_entry(j, i, n, x);
}

ExactRational n_entry(long i, long j, long n, const ExactRational& x) {
  if (n < 1) throw DomainError("N(x) requires n >= 1");
  const long last = 2 * n + 2;
  const long special = 2 * n + 1;
  if (i < 1 || j < 1 || i > last || j > last) {
    throw ArgumentError("N(x) index out of range");
  }
  if (i == j) return 0;
  if ((i == special && j == last) || (i == last && j == special)) return 0;
  if (j == special) {
    return binomial(2 * n + 2 * x + 1, i) - binomial(n + x, i) -
           binomial(n + x + 1, i);
  }
  if (i == special) return -n_entry(j, i, n, x);
  return m_entry(i, j, n, x);
}

SkewMatrix build_M(long n, const ExactRational& x) {
  if (n < 0) throw DomainError("M(x) requires n >= 0");
  return SkewMatrix(static_cast<std::size_t>(2 * n + 2),
                    [&](std::size_t i, std::size_t j) {
                      return m_entry(static_cast<long>(i) + 1,
                                     static_cast<long>(j) + 1, n, x);
                    });
}

SkewMatrix build_N(long n, const ExactRational& x) {
  if (n < 1) throw DomainError("N(x) requires n >= 1");
  return SkewMatrix(static_cast<std::size_t>(2 * n + 2),
                    [&](std::size_t i, std::size_t j) {
                      return n_entry(static_cast<long>(i) + 1,
                                     static_cast<long>(j) + 1, n, x);
                    });
}

}  // namespace hexcensus
