#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuscond/basering.h"
#include "fuscond/modulardata.h"
#include "fuscond/semisimple.h"

namespace fuscond {

/// Dimension data of the ambient category. Depending on how much is known it
/// carries full modular data (possibly as a Deligne product of factors), a
/// fusion ring with dimensions, or only labels with dimensions.
class Ambient {
 public:
  enum class Kind { Modular, Product, Ring, Dims };

  static Ambient from_modular(ModularData md);
  /// Deligne product of the factors; S-entries are products of factor entries
  /// and are never materialized as a full matrix.
  static Ambient from_factors(std::vector<ModularData> factors, const std::string& separator = ":");
  static Ambient from_ring(BasedRing ring, DimVector dims, std::optional<ScalarVector> twists);
  static Ambient from_dims(std::vector<std::string> labels, std::vector<std::size_t> dual,
                           DimVector dims, std::optional<ScalarVector> twists);

  Kind kind() const { return kind_; }
  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index_of(const std::string& name) const;
  std::size_t dual(std::size_t i) const { return dual_.at(i); }
  const std::vector<std::size_t>& duals() const { return dual_; }
  const DimVector& dims() const { return dims_; }
  const std::optional<ScalarVector>& twists() const { return twists_; }
  /// Fusion ring when known (all kinds except Dims).
  const BasedRing* ring() const { return ring_ ? &*ring_ : nullptr; }
  const std::vector<ModularData>& factors() const { return factors_; }
  const std::string& separator() const { return separator_; }

  bool has_s() const { return !factors_.empty(); }
  /// Unnormalized S-entry; requires has_s().
  Scalar s(std::size_t x, std::size_t y) const;
  Scalar global_dim() const;

 private:
  Ambient() = default;
  std::vector<std::size_t> split_index(std::size_t x) const;

  Kind kind_ = Kind::Dims;
  std::vector<std::string> labels_;
  std::vector<std::size_t> dual_;
  DimVector dims_;
  std::optional<ScalarVector> twists_;
  std::optional<BasedRing> ring_;
  std::vector<ModularData> factors_;
  std::string separator_ = ":";
};

/// A condensable algebra A (as multiplicities n_x = [x, A]) together with the
/// data of its module category: fusion ring of C_A, A-module dimensions,
/// optional induction matrix M[x][Y] = [alpha(x), Y], and the local simples.
struct CondensationBundle {
  std::string name;
  Ambient ambient;
  std::vector<int> mult;
  BasedRing module_ring;
  DimVector dA;
  std::optional<std::vector<std::vector<int>>> induction;
  Subring local;

  Scalar algebra_dim() const;  // d(A) = sum n_x d(x)
};

/// Necessary conditions for condensability plus the bundle dimension identities.
ValidationReport check_bundle(const CondensationBundle& b);

/// e^B = (1/dim B) sum_{Y in B} d_A(Y) Y.
Element e_sub(const CondensationBundle& b, const Subring& sub);

struct BlockMatch {
  std::optional<std::size_t> x;  // ambient label, when matched
  long long m = 0;
  double best_residual = 0;
  double second_residual = 0;
  Scalar dim_x;  // d(x): from the ambient when matched, else inferred from the codegree
};

struct SchurWeylReport {
  std::size_t rank = 0;
  long long ideal_dim = 0;
  long long kernel_dim = 0;
  long long sum_n_squared = 0;
  std::vector<long long> block_m;     // sorted simple dimensions found
  std::vector<long long> expected_m;  // sorted nonzero n_x
  std::vector<Block> blocks;          // blocks of e^local K
  std::vector<std::vector<Complex>> characters;  // per block, at each basis label
  std::vector<BlockMatch> matches;    // parallel to blocks
  bool matched = false;               // every block matched to an ambient label
  std::optional<std::size_t> trivial_block;  // block whose character is d_A
  Element e_local;
  BlockProfile profile;               // decomposition of the full algebra
  ValidationReport checks;
};

/// Verifies the Schur-Weyl duality statements. Throws TheoremViolation when the
/// kernel dimension or the multiset of simple dimensions disagrees with n.
SchurWeylReport schur_weyl(const CondensationBundle& b);

/// Character of W_x at a. Throws CapabilityError when blocks are unmatched.
Complex indicator(const CondensationBundle& b, const SchurWeylReport& sw, std::size_t x,
                  const Element& a);

/// Block index matched to x, or nullopt.
std::optional<std::size_t> block_of(const SchurWeylReport& sw, std::size_t x);

/// phi_W = sum_Y chi_W(Y) Y* acts on W as the formal codegree
/// f = dim(C)/(d(x) d(A)) (trace n_x f) and as 0 on the other blocks.
ValidationReport codegree_check(const CondensationBundle& b, const SchurWeylReport& sw);

/// Max |e e - e| under module-ring multiplication.
double idempotent_residual(const CondensationBundle& b, const Element& e);

/// Max |e Y - Y e| over basis labels Y.
double central_residual(const CondensationBundle& b, const Element& e);

}  // namespace fuscond
