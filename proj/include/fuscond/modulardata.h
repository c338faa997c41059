#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuscond/basering.h"
#include "fuscond/scalar.h"

namespace fuscond {

using ScalarMatrix = std::vector<std::vector<Scalar>>;
using ScalarVector = std::vector<Scalar>;

/// (S, T) data of a modular tensor category with the unnormalized S-matrix:
/// S[0][i] = d(i) and S S^dagger = dim * I.
class ModularData {
 public:
  ModularData(std::vector<std::string> labels, std::vector<std::size_t> dual, ScalarMatrix s,
              ScalarVector twists);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::size_t>& duals() const { return dual_; }
  std::size_t dual(std::size_t i) const { return dual_.at(i); }
  std::size_t index_of(const std::string& name) const;

  const Scalar& s(std::size_t i, std::size_t j) const { return s_[i][j]; }
  const ScalarMatrix& s_matrix() const { return s_; }
  const Scalar& twist(std::size_t i) const { return t_[i]; }
  const ScalarVector& twists() const { return t_; }

  /// Row 0 of S.
  DimVector dims() const;
  /// sum_i d(i)^2
  Scalar global_dim() const;

  /// Fusion ring: the attached one when present, otherwise Verlinde's formula.
  const BasedRing& fusion_ring() const;
  /// Attaches known fusion rules so fusion_ring() skips the Verlinde sum.
  void attach_fusion(BasedRing ring);
  bool has_attached_fusion() const { return attached_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> dual_;
  ScalarMatrix s_;
  ScalarVector t_;
  mutable std::optional<BasedRing> fusion_;
  bool attached_ = false;
};

/// Symmetry, positivity of row 0, unitarity S S^dagger = dim I, roots-of-unity
/// twists, S[i][j*] = conj S[i][j], and (when fusion is attached) agreement with
/// Verlinde.
ValidationReport validate(const ModularData& md, double tol);

/// N[i][j][k] = (1/dim) sum_r S[i][r] S[j][r] conj(S[k][r]) / S[0][r], rounded.
/// Throws InconsistentData when an entry is not a nonnegative integer.
BasedRing verlinde(const ModularData& md);

/// chi_X(Y) = S[X][Y] / S[0][X].
ScalarMatrix characters(const ModularData& md);

/// Coefficients of e_X = (d(X)/dim) sum_Y S[X][Y] Y*.
ScalarVector central_idempotent(const ModularData& md, std::size_t x);

struct IdempotentCheck {
  double orthogonality = 0;  // max |e_X e_X' - delta e_X|
  double completeness = 0;   // max |sum_X e_X - 1|
};

/// Multiplies all S-matrix idempotents under the fusion ring of md.
IdempotentCheck check_central_idempotents(const ModularData& md);

/// S from the balancing identity
/// S[x][y] = theta_x^-1 theta_y^-1 sum_z N[x*][y][z] theta_z d_z.
ScalarMatrix balancing_s_matrix(const BasedRing& ring, const DimVector& dims,
                                const ScalarVector& twists);

/// Modular data assembled from fusion rules, dimensions and twists.
ModularData modular_data_from_balancing(const BasedRing& ring, const DimVector& dims,
                                        const ScalarVector& twists);

ModularData deligne_product(const ModularData& a, const ModularData& b,
                            const std::string& separator = ":");

/// Reversed braiding: conjugate S and T.
ModularData reverse(const ModularData& md);

/// Multiplies two elements (coefficient vectors over the basis) in a based ring.
ScalarVector multiply(const BasedRing& ring, const ScalarVector& a, const ScalarVector& b);
Element multiply(const BasedRing& ring, const Element& a, const Element& b);

}  // namespace fuscond
