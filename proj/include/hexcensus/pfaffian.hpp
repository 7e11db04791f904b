#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hexcensus/exact.hpp"

namespace hexcensus {

/// Dense skew-symmetric matrix over exact rationals. Entries are stored in
/// full; antisymmetry is enforced at construction and the value is immutable
/// afterwards. Indices are 0-based.
class SkewMatrix {
 public:
  using UpperGenerator = std::function<ExactRational(std::size_t, std::size_t)>;

  /// Zero matrix.
  explicit SkewMatrix(std::size_t size);

  /// Fills (i, j) for i < j from `upper` and completes by antisymmetry.
  SkewMatrix(std::size_t size, const UpperGenerator& upper);

  /// Validates a full row-major grid. Throws ArgumentError if the grid is
  /// not square or not skew-symmetric.
  static SkewMatrix from_rows(const std::vector<std::vector<ExactRational>>& rows);

  std::size_t size() const { return size_; }

  const ExactRational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * size_ + col];
  }

  /// Simultaneous swap of rows i, j and columns i, j.
  SkewMatrix with_swapped(std::size_t i, std::size_t j) const;

  /// Rows as a plain grid (for printing and generic linear algebra).
  std::vector<std::vector<ExactRational>> rows() const;

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  std::size_t size_;
  std::vector<ExactRational> entries_;
};

/// Pfaffian by skew-symmetric (Parlett-Reid) elimination. Throws DomainError
/// for odd size; the 0x0 Pfaffian is 1.
ExactRational pf(const SkewMatrix& m);

/// Pfaffian as a signed sum over perfect matchings; independent of pf().
/// Throws ResourceError above size 10 and DomainError for odd size.
ExactRational pf_reference(const SkewMatrix& m);

/// Exact determinant by Gaussian elimination over the rationals.
ExactRational det(const SkewMatrix& m);
ExactRational det(std::vector<std::vector<ExactRational>> rows);

/// Skew matrix with entries (j - i)/(b + i + j)!, 0 <= i, j <= 2k - 1.
SkewMatrix mehta_wang_matrix(long k, long b);

/// Product formula for the Pfaffian of mehta_wang_matrix(k, b).
ExactRational mehta_wang_pf(long k, long b);

/// Coefficients lambda_1..lambda_{2s-1} of the first-column elimination for
/// a Mehta-Wang block of size 2s - 1 (entries (j-i)/(R+i+j)!, 1-based).
std::vector<ExactRational> lambda_coeffs(long s, long r);

/// The 2s x 2s matrix whose leading (2s-1) block has entries
/// (j-i)/(R+i+j)! (1-based) and whose last row is `last_row`
/// (entries a_{2s,1}..a_{2s,2s-1}).
SkewMatrix perturbed_mw_matrix(long s, long r,
                               std::span<const ExactRational> last_row);

/// Closed form for pf(perturbed_mw_matrix(s, r, last_row)).
ExactRational perturbed_mw_pf(long s, long r,
                              std::span<const ExactRational> last_row);

}  // namespace hexcensus
