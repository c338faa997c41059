#pragma once

#include <cstddef>
#include <vector>

#include "fuscond/numeric.h"

namespace fuscond {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

/// Incremental row reduction over Q. Rows are added one at a time and kept in
/// reduced echelon form, so large sparse systems never need to be stored.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  /// Returns true if the row increased the rank.
  bool add_row(RationalVector row);
  std::size_t rank() const { return rows_.size(); }
  /// Basis of {x : row . x = 0 for every added row}; each basis vector is 1
  /// at its own free column and 0 at the other free columns.
  RationalMatrix nullspace() const;
  /// Free (non-pivot) columns in increasing order.
  std::vector<std::size_t> free_columns() const;

 private:
  std::size_t cols_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Characteristic polynomial det(t I - A), lowest degree first (monic).
RationalVector characteristic_polynomial(const RationalMatrix& a);

/// Degree of gcd(p, q) over Q; polynomials are lowest degree first.
std::size_t gcd_degree(RationalVector p, RationalVector q);

RationalVector derivative(const RationalVector& p);

}  // namespace fuscond
