#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fuscond/basering.h"
#include "fuscond/linalg.h"
#include "fuscond/numeric.h"

namespace fuscond {

/// Finite-dimensional unital associative algebra over Q, complexified on demand.
class AssocAlgebra {
 public:
  using Term = std::pair<std::size_t, Rational>;

  AssocAlgebra(std::size_t dim, std::vector<std::vector<Term>> products, RationalVector unit);
  /// The complexified fusion ring: basis = labels, unit = label 0.
  static AssocAlgebra from_ring(const BasedRing& ring);

  std::size_t dim() const { return dim_; }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const {
    return products_[i * dim_ + j];
  }
  const RationalVector& unit() const { return unit_; }
  Element unit_element() const;
  Element basis_element(std::size_t i) const;

  RationalVector multiply(const RationalVector& a, const RationalVector& b) const;
  Element multiply(const Element& a, const Element& b) const;

  /// Matrix of x -> a x.
  CMatrix left_mult(const Element& a) const;

  /// t_j = Tr(left_mult(b_j)).
  const RationalVector& trace_vector() const { return trace_; }
  /// Tr(left_mult(a)).
  Complex regular_trace(const Element& a) const;
  /// Tr(left_mult(a b)) as the bilinear form a^T F b.
  Complex trace_pairing(const Element& a, const Element& b) const;

 private:
  std::size_t dim_;
  std::vector<std::vector<Term>> products_;
  std::vector<std::vector<std::pair<std::size_t, Real>>> real_products_;
  RationalVector unit_;
  RationalVector trace_;
  std::vector<std::vector<std::pair<std::size_t, Real>>> form_;  // sparse rows of F
};

/// Associativity and two-sided unit checks.
ValidationReport validate(const AssocAlgebra& alg);

/// Rational basis of the center, in reduced form: basis vector b is 1 at
/// free_columns[b] and 0 at the other free columns.
struct CenterBasis {
  RationalMatrix basis;
  std::vector<std::size_t> free_columns;
};
CenterBasis center(const AssocAlgebra& alg);

struct Block {
  Element idempotent;
  long long block_dim = 0;  // dim(e A e) = Tr(left_mult(e))
  long long m = 0;          // simple-module dimension, m^2 = block_dim
};

struct BlockProfile {
  std::vector<Block> blocks;
  std::uint64_t seed = 0;  // seed that produced a separating central element
  int retries = 0;
  double orthogonality = 0;  // max |e_i e_j - delta e_i|
  double completeness = 0;   // max |sum e_i - 1|
  double centrality = 0;     // max |e b - b e| over basis b
};

/// Primitive central idempotents by splitting a random central element.
/// Blocks are sorted by m, then by their character values. Throws
/// NumericalError when eigenvalues stay clustered after 8 retries and
/// InconsistentData when a block dimension is not a perfect square.
BlockProfile central_idempotents(const AssocAlgebra& alg);

/// (1/m) Tr(left_mult(e a)): the character of the block's simple module at a.
Complex normalized_block_trace(const AssocAlgebra& alg, const Block& block, const Element& a);

/// normalized_block_trace at every basis element.
std::vector<Complex> block_character(const AssocAlgebra& alg, const Block& block);

}  // namespace fuscond
