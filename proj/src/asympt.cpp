#include "hexcensus/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hexcensus/errors.hpp"

namespace hexcensus {

namespace {

double lfact(double k) { return std::lgamma(k + 1.0); }

// Terminating 4F3 with a leading upper parameter 1 (which cancels k!):
// sum_{k=0}^{n-1} prod (upper)_k / prod (lower)_k * z^k.
double series(const double (&upper)[3], const double (&lower)[3], double z, long n) {
  double sum = 0.0;
  double term = 1.0;
  for (long k = 0; k < n; ++k) {
    sum += term;
    if (k + 1 == n) break;
    const double kk = static_cast<double>(k);
    double ratio = z;
    for (int i = 0; i < 3; ++i) ratio *= (upper[i] + kk) / (lower[i] + kk);
    term *= ratio;
  }
  return sum;
}

void require_b(double b) {
  if (!(std::abs(b) > 1.0)) throw DomainError("limit lemma requires |b| > 1");
}

}  // namespace

double arcsin_prob(double a) {
  if (a < 0) throw DomainError("arcsin probability requires a >= 0");
  return 2.0 / std::numbers::pi * std::asin(1.0 / (a + 1.0));
}

double r_float(long n, long x) {
  if (n < 1) throw DomainError("R(n,x) requires n >= 1");
  if (x < 0) throw DomainError("R(n,x) requires x >= 0");
  const double nd = static_cast<double>(n);
  const double xd = static_cast<double>(x);

  const double log_pre = (3.0 * nd - 2.0) * std::numbers::ln2 + lfact(2 * xd + 2) +
                         lfact(xd + 2 * nd) - lfact(nd) - lfact(xd + 1) -
                         lfact(2 * xd + 4 * nd);
  // (3/2 - n)_{2n-1} / ((n-1)! n!): n-1 negative factors.
  const double log_a = std::lgamma(nd - 0.5) + std::lgamma(nd + 0.5) -
                       std::log(std::numbers::pi) - lfact(nd - 1) - lfact(nd);
  const double sign_a = (n - 1) % 2 == 0 ? 1.0 : -1.0;
  const double log_even_df = nd * std::numbers::ln2 + lfact(nd);
  const double log_odd_df = lfact(2 * nd) - log_even_df;
  // (x+1)_{n-1} (x+n+1)_n and (x+1)_n (x+n+2)_{n-1}.
  const double log_p1 = std::lgamma(xd + nd) + std::lgamma(xd + 2 * nd + 1) -
                        std::lgamma(xd + 1) - std::lgamma(xd + nd + 1);
  const double log_p2 = std::lgamma(xd + nd + 1) + std::lgamma(xd + 2 * nd + 1) -
                        std::lgamma(xd + 1) - std::lgamma(xd + nd + 2);

  const double up1[3] = {nd + 0.5, 1.0 - nd, -nd - xd};
  const double lo1[3] = {nd + 1.0, 1.5 - nd, 1.0 - nd - xd};
  const double up2[3] = {xd + nd + 1.0, nd + 0.5, 1.0 - nd};
  const double lo2[3] = {nd + 1.0, 1.5 - nd, xd + nd + 2.0};

  const double base = log_pre + log_a;
  const double alt =
      std::exp(base + log_odd_df + log_p1) * series(up1, lo1, -1.0, n) -
      std::exp(base + log_odd_df + log_p2) * series(up2, lo2, -1.0, n);
  const double plain =
      std::exp(base + log_even_df + log_p1) * series(up1, lo1, 1.0, n) -
      std::exp(base + log_even_df + log_p2) * series(up2, lo2, 1.0, n);
  const double even_sign = (n + 1) % 2 == 0 ? 1.0 : -1.0;
  return sign_a * (alt + even_sign * plain);
}

double f_summand(long n, long k, double b, double r) {
  require_b(b);
  if (n < 1 || k < 0 || k > n - 1) throw DomainError("F(n,k) requires 0 <= k <= n-1");
  if (r < 0) throw DomainError("F(n,k) requires r >= 0");
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double shift = b * nd + r;
  // The k-independent factor n(n-1/2) G(n) G(n-1/2) / (G(n+1/2) G(n+1)) is
  // identically 1; the two remaining ratios vanish in log space at k = 0.
  const double rising = std::lgamma(nd + kd + 0.5) - std::lgamma(nd + 0.5) +
                        std::lgamma(nd + 1.0) - std::lgamma(nd + kd + 1.0);
  const double falling = std::lgamma(nd - kd - 0.5) - std::lgamma(nd - 0.5) +
                         std::lgamma(nd) - std::lgamma(nd - kd);
  return shift / (shift + kd) * std::exp(rising) * std::exp(falling);
}

double lemma_limit_lhs(long n, double b, double r) {
  require_b(b);
  double sum = 0.0;
  for (long k = 0; k < n; ++k) sum += f_summand(n, k, b, r);
  return sum / static_cast<double>(n);
}

double closed_rhs(double b) {
  require_b(b);
  return 2.0 * b / (b + 1.0) * std::sqrt((b + 1.0) / (b - 1.0)) *
         std::atan(std::sqrt((b - 1.0) / (b + 1.0)));
}

AsymptReport asympt_report(double ratio, const std::vector<long>& n_values) {
  if (n_values.empty()) throw ArgumentError("asymptotic report needs at least one n");
  AsymptReport rep;
  rep.ratio = ratio;
  rep.target = arcsin_prob(ratio);
  rep.n_values = n_values;
  for (long n : n_values) {
    const long x = std::lround(ratio * static_cast<double>(n));
    const double v = r_float(n, x);
    rep.x_values.push_back(x);
    rep.measured.push_back(v);
    rep.abs_errors.push_back(std::abs(v - rep.target));
  }
  rep.max_abs_error = *std::max_element(rep.abs_errors.begin(), rep.abs_errors.end());
  rep.monotone_approach = true;
  for (std::size_t i = 1; i < rep.abs_errors.size(); ++i) {
    if (!(rep.abs_errors[i] < rep.abs_errors[i - 1])) rep.monotone_approach = false;
  }
  return rep;
}

}  // namespace hexcensus
