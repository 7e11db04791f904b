#include "hexcensus/pfaffian.hpp"

#include <string>
#include <utility>

#include "hexcensus/errors.hpp"

namespace hexcensus {

SkewMatrix::SkewMatrix(std::size_t size)
    : size_(size), entries_(size * size) {}

SkewMatrix::SkewMatrix(std::size_t size, const UpperGenerator& upper)
    : SkewMatrix(size) {
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = i + 1; j < size_; ++j) {
      ExactRational v = upper(i, j);
      entries_[j * size_ + i] = -v;
      entries_[i * size_ + j] = std::move(v);
    }
  }
}

SkewMatrix SkewMatrix::from_rows(
    const std::vector<std::vector<ExactRational>>& rows) {
  const std::size_t n = rows.size();
  SkewMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ArgumentError("matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] != -rows[j][i]) {
        throw ArgumentError("matrix is not skew-symmetric at (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
      }
      out.entries_[i * n + j] = rows[i][j];
    }
  }
  return out;
}

SkewMatrix SkewMatrix::with_swapped(std::size_t i, std::size_t j) const {
  auto perm = [&](std::size_t k) { return k == i ? j : (k == j ? i : k); };
  return SkewMatrix(size_, [&](std::size_t r, std::size_t c) {
    return (*this)(perm(r), perm(c));
  });
}

std::vector<std::vector<ExactRational>> SkewMatrix::rows() const {
  std::vector<std::vector<ExactRational>> out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * size_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * size_));
  }
  return out;
}

ExactRational pf(const SkewMatrix& m) {
  const std::size_t n = m.size();
  if (n % 2 != 0) throw DomainError("Pfaffian of odd-size matrix");
  auto a = m.rows();
  ExactRational result = 1;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t pivot = k + 1;
    while (pivot < n && a[k][pivot] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k + 1) {
      std::swap(a[k + 1], a[pivot]);
      for (auto& row : a) std::swap(row[k + 1], row[pivot]);
      result = -result;
    }
    const ExactRational& p = a[k][k + 1];
    result *= p;
    // Congruence by row/col i -= c_i * row/col (k+1) clears row k beyond
    // k+1 and leaves the Pfaffian unchanged. Only the trailing block is
    // read afterwards, so only it is updated.
    std::vector<ExactRational> c(n);
    for (std::size_t i = k + 2; i < n; ++i) c[i] = a[k][i] / p;
    for (std::size_t i = k + 2; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        ExactRational v = a[i][j] - c[i] * a[k + 1][j] + c[j] * a[k + 1][i];
        a[j][i] = -v;
        a[i][j] = std::move(v);
      }
    }
  }
  return result;
}

namespace {

ExactRational matching_sum(const SkewMatrix& m, std::vector<std::size_t>& free) {
  if (free.empty()) return 1;
  const std::size_t first = free.front();
  ExactRational total = 0;
  // Expansion along the first free index: partner at position t (1-based
  // among the remaining) contributes with sign (-1)^(t+1).
  for (std::size_t t = 1; t < free.size(); ++t) {
    const std::size_t partner = free[t];
    if (m(first, partner) == 0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(free.size() - 2);
    for (std::size_t u = 1; u < free.size(); ++u)
      if (u != t) rest.push_back(free[u]);
    const ExactRational sub = matching_sum(m, rest);
    if (t % 2 == 1)
      total += m(first, partner) * sub;
    else
      total -= m(first, partner) * sub;
  }
  return total;
}

}  // namespace

ExactRational pf_reference(const SkewMatrix& m) {
  if (m.size() > 10) throw ResourceError("pf_reference is limited to size 10");
  if (m.size() % 2 != 0) throw DomainError("Pfaffian of odd-size matrix");
  std::vector<std::size_t> all(m.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return matching_sum(m, all);
}

ExactRational det(std::vector<std::vector<ExactRational>> a) {
  const std::size_t n = a.size();
  ExactRational result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      result = -result;
    }
    result *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const ExactRational factor = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return result;
}

ExactRational det(const SkewMatrix& m) { return det(m.rows()); }

SkewMatrix mehta_wang_matrix(long k, long b) {
  if (k < 1) throw DomainError("Mehta-Wang matrix requires k >= 1");
  if (b < 0) throw DomainError("Mehta-Wang matrix requires b >= 0");
  return SkewMatrix(static_cast<std::size_t>(2 * k),
                    [b](std::size_t i, std::size_t j) {
                      const long li = static_cast<long>(i);
                      const long lj = static_cast<long>(j);
                      return make_rational(lj - li, factorial(b + li + lj));
                    });
}

ExactRational mehta_wang_pf(long k, long b) {
  if (k < 1) throw DomainError("Mehta-Wang Pfaffian requires k >= 1");
  ExactRational out = 1;
  for (long i = 0; i < k; ++i) {
    out *= make_rational(factorial(2 * i + 1), factorial(b + 2 * k + 2 * i - 1));
  }
  return out;
}

std::vector<ExactRational> lambda_coeffs(long s, long r) {
  if (s < 1 || r < 1) throw DomainError("lambda coefficients need s, R >= 1");
  std::vector<ExactRational> out;
  out.reserve(static_cast<std::size_t>(2 * s - 1));
  for (long j = 1; j <= 2 * s - 1; ++j) {
    ExactRational sum = 0;
    for (long k = 0; k < s; ++k) {
      const long m = j + k - s;
      if (m < 0) continue;
      sum += power_of_two(-k) / ExactRational(factorial(k)) *
             ExactRational(binomial(2 * k, m)) *
             pochhammer(ExactRational(r + 2 * s), m);
    }
    out.push_back(sign_power(j + 1) * sum);
  }
  return out;
}

SkewMatrix perturbed_mw_matrix(long s, long r,
                               std::span<const ExactRational> last_row) {
  if (s < 1 || r < 1) throw DomainError("perturbed Mehta-Wang needs s, R >= 1");
  if (last_row.size() != static_cast<std::size_t>(2 * s - 1)) {
    throw ArgumentError("last row must have 2s-1 entries");
  }
  const std::size_t size = static_cast<std::size_t>(2 * s);
  return SkewMatrix(size, [&](std::size_t i, std::size_t j) -> ExactRational {
    if (j == size - 1) return -last_row[i];
    const long li = static_cast<long>(i) + 1;
    const long lj = static_cast<long>(j) + 1;
    return make_rational(lj - li, factorial(r + li + lj));
  });
}

ExactRational perturbed_mw_pf(long s, long r,
                              std::span<const ExactRational> last_row) {
  if (last_row.size() != static_cast<std::size_t>(2 * s - 1)) {
    throw ArgumentError("last row must have 2s-1 entries");
  }
  const std::vector<ExactRational> lambda = lambda_coeffs(s, r);
  ExactRational weighted = 0;
  for (std::size_t j = 0; j < lambda.size(); ++j) weighted += last_row[j] * lambda[j];
  ExactRational product = 1;
  for (long i = 0; i <= s - 2; ++i) {
    product *= make_rational(factorial(2 * i + 1), factorial(r + 2 * s + 1 + 2 * i));
  }
  return -power_of_two(s - 1) * ExactRational(factorial(s - 1)) * weighted * product;
}

}  // namespace hexcensus
