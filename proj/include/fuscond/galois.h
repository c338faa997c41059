#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuscond/condensation.h"

namespace fuscond {

/// Fusion subrings of the module ring that contain the local simples.
std::vector<Subring> lattice(const CondensationBundle& b);

/// Multiplicities of A^B, one per block of the Schur-Weyl report:
/// n'_k = (1/m_k) Tr(left_mult(e_k e^B)), rounded. Throws NumericalError when
/// rounding fails and TheoremViolation when n' exceeds n or breaks duality.
std::vector<long long> invariant_subalgebra(const CondensationBundle& b, const SchurWeylReport& sw,
                                            const Subring& sub);

struct LatticeEntry {
  Subring sub;
  std::vector<long long> n_prime;  // per block
  Scalar dim_b;                    // sum of d_A(Y)^2 over sub
  Scalar d_inv;                    // d(A^B)
  double formula_residual = 0;     // |dim B - dim C/(d(A) d(A^B))|
};

struct GaloisReport {
  std::vector<LatticeEntry> entries;            // sorted by size, then members
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // covering pairs (smaller, larger)
  bool bijective = false;              // distinct e^B, each absorbed by the local idempotent
  bool multiplicities_distinct = false;  // informational: n' alone separates the lattice
  bool order_reversing = false;
  bool endpoints = false;
  ValidationReport checks;

  bool ok() const { return checks.ok(); }
  /// Position of `sub` in entries, if present.
  std::optional<std::size_t> find(const Subring& sub) const;
};

GaloisReport verify_correspondence(const CondensationBundle& b, const SchurWeylReport& sw);

/// Markdown table of the lattice.
std::string galois_markdown(const CondensationBundle& b, const SchurWeylReport& sw, const GaloisReport& g);
/// Hasse diagram, nodes labelled "B (dim) <-> A^B (d)".
std::string galois_dot(const CondensationBundle& b, const SchurWeylReport& sw, const GaloisReport& g);

/// "L+:K+ + 2 L1:K1", or block names when unmatched.
std::string describe_multiplicities(const CondensationBundle& b, const SchurWeylReport& sw,
                                    const std::vector<long long>& n_prime);

struct GroupTable {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of elements[i] * elements[j]
  std::string name;                             // Z<n>, Z2^<k>, D<2m> or G<n>
};

/// Identifies small groups by name from a multiplication table with identity 0.
std::string group_name(const std::vector<std::vector<std::size_t>>& table);

/// Tests whether the normalized coset representatives e Y / d_A(Y) close into
/// a group basis of eK. Returns nothing when some product is not a single
/// basis element.
std::optional<GroupTable> group_quotient(const CondensationBundle& b, const SchurWeylReport& sw);

/// Group of invertible simples of the module ring.
GroupTable pointed_subgroup(const BasedRing& ring);

}  // namespace fuscond
