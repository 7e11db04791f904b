#pragma once

// Floating-point evaluation of the centered-symmetric probability via its
// terminating 4F3 representation, and the limit lemma behind the arcsine
// law for large hexagons.

#include <vector>

namespace hexcensus {

/// (2/pi) arcsin(1/(a+1)); a >= 0.
double arcsin_prob(double a);

/// R(n, x) from log-gamma prefactors and four terminating 4F3 sums.
/// n >= 1, x >= 0.
double r_float(long n, long x);

/// Summand F(n, k) of the 4F3 series in the limit lemma, 0 <= k <= n-1,
/// |b| > 1, r >= 0. F(n, 0) == 1 exactly.
double f_summand(long n, long k, double b, double r);

/// (1/n) * sum_{k=0}^{n-1} F(n, k).
double lemma_limit_lhs(long n, double b, double r);

/// (2b/(b+1)) sqrt((b+1)/(b-1)) arctan(sqrt((b-1)/(b+1))); |b| > 1.
double closed_rhs(double b);

struct AsymptReport {
  std::vector<long> n_values;
  std::vector<long> x_values;
  double ratio = 0;
  std::vector<double> measured;
  std::vector<double> abs_errors;
  double target = 0;
  double max_abs_error = 0;
  bool monotone_approach = false;
};

/// Measures r_float(n, round(ratio * n)) against arcsin_prob(ratio).
/// monotone_approach is true iff the absolute errors strictly decrease.
AsymptReport asympt_report(double ratio, const std::vector<long>& n_values);

}  // namespace hexcensus
