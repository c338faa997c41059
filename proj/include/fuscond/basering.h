#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuscond/scalar.h"

namespace fuscond {

/// Rings above this rank are refused by enumerate_subrings.
inline constexpr std::size_t kMaxEnumerationRank = 24;

struct Label {
  std::size_t index = 0;
  std::string name;
};

/// A fusion ring (Z+-based ring): basis labels with index 0 the unit, a dual
/// involution, and nonnegative integer structure constants N[i][j][k] giving the
/// multiplicity of k in i*j. Immutable after construction.
class BasedRing {
 public:
  using Term = std::pair<std::size_t, int>;

  /// `fusion` is the flat rank^3 tensor in [i][j][k] row-major order.
  /// Throws StructuralError on inconsistent sizes or out-of-range duals.
  BasedRing(std::vector<std::string> names, std::vector<std::size_t> dual,
            std::vector<int> fusion);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<Label>& labels() const { return labels_; }
  const std::string& name(std::size_t i) const { return labels_.at(i).name; }
  std::vector<std::string> names() const;
  /// Index of a label by name; throws StructuralError when absent.
  std::size_t index_of(std::string_view name) const;

  std::size_t dual(std::size_t i) const { return dual_.at(i); }
  const std::vector<std::size_t>& duals() const { return dual_; }

  int N(std::size_t i, std::size_t j, std::size_t k) const {
    return fusion_[(i * rank() + j) * rank() + k];
  }
  /// Nonzero terms (k, N[i][j][k]) of i*j.
  const std::vector<Term>& product(std::size_t i, std::size_t j) const {
    return products_[i * rank() + j];
  }
  const std::vector<int>& fusion_flat() const { return fusion_; }

  friend bool operator==(const BasedRing& a, const BasedRing& b);

 private:
  std::vector<Label> labels_;
  std::vector<std::size_t> dual_;
  std::vector<int> fusion_;
  std::vector<std::vector<Term>> products_;
};

/// One failed (or, in `passed`, one satisfied) check with its offending indices.
struct Finding {
  std::string check;
  std::vector<std::size_t> where;
  std::string detail;
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<Finding> violations;
  std::vector<Finding> passed;

  bool ok() const { return violations.empty(); }
  bool has_violation(std::string_view check, const std::vector<std::size_t>& where) const;
  bool has_violation(std::string_view check) const;
  void fail(std::string check, std::vector<std::size_t> where, std::string detail,
            double residual = 0.0);
  void pass(std::string check, std::string detail = {}, double residual = 0.0);
  void merge(const ValidationReport& other, const std::string& prefix);
  std::string to_markdown() const;
};

enum class DimSource { FrobeniusPerron, Supplied };

struct DimVector {
  std::vector<Scalar> values;
  DimSource source = DimSource::Supplied;

  std::size_t size() const { return values.size(); }
  const Scalar& operator[](std::size_t i) const { return values[i]; }
};

/// Sorted set of label indices that contains the unit.
struct Subring {
  std::vector<std::size_t> members;

  Subring() = default;
  explicit Subring(std::vector<std::size_t> m);
  std::size_t size() const { return members.size(); }
  bool contains(std::size_t i) const;
  bool is_subset_of(const Subring& other) const;

  friend bool operator==(const Subring& a, const Subring& b) { return a.members == b.members; }
  friend bool operator!=(const Subring& a, const Subring& b) { return !(a == b); }
  /// Orders by size, then lexicographically by members.
  friend bool operator<(const Subring& a, const Subring& b);
};

/// Checks unit, duality, dual-involution, nonnegativity, dual-transpose and
/// associativity axioms; every violation is listed with its index tuple.
ValidationReport validate(const BasedRing& ring);

/// Frobenius-Perron dimensions: Perron eigenvector of the total
/// left-multiplication matrix, normalized at the unit.
DimVector fp_dims(const BasedRing& ring);

/// DimVector invariants: d[0] = 1, d[i] = d[dual i] and d[i]d[j] = sum_k N d[k].
ValidationReport check_dims(const BasedRing& ring, const DimVector& dims, double tol);

/// True if `sub` contains the unit and is closed under dual and fusion.
bool is_subring(const BasedRing& ring, const Subring& sub);

/// Smallest subring containing the seeds (and the unit).
Subring subring_generated(const BasedRing& ring, const std::vector<std::size_t>& seeds);

/// Every subring containing `must_contain`, sorted by (size, members).
/// Throws CapabilityError above kMaxEnumerationRank.
std::vector<Subring> enumerate_subrings(const BasedRing& ring, const Subring& must_contain);

/// Sum of squared dimensions over the subring.
Scalar subring_dim(const BasedRing& ring, const DimVector& dims, const Subring& sub);

/// Group ring from a Cayley table whose element 0 is the identity.
BasedRing group_ring(const std::vector<std::vector<std::size_t>>& table,
                     std::vector<std::string> names = {});

/// Tensor product of fusion rings; label (i, j) has index i * b.rank() + j and
/// name "a:b" joined by `separator`.
BasedRing deligne_product(const BasedRing& a, const BasedRing& b,
                          const std::string& separator = ":");

/// Invertible basis elements (X with X X* = 1) in index order.
std::vector<std::size_t> invertible_elements(const BasedRing& ring);

}  // namespace fuscond
