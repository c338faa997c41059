#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuscond/condensation.h"

namespace fuscond {

enum class Family { A2n, A2nPlus1, VLplusOrbifold, ToricCode, IsingSquare, CosetDiagonal };

struct ExampleSpec {
  Family family = Family::ToricCode;
  int n = 1;
  std::optional<ModularData> md;  // CosetDiagonal only
};

/// Throws CapabilityError for unsupported (family, n).
CondensationBundle build(const ExampleSpec& spec);

/// CLI names: a2n, a2nplus1, vlplus-orbifold, toric-code, ising-square, coset.
std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);
std::vector<std::string> family_names();

/// Z2 Drinfeld double: labels 1, e, m, f.
ModularData toric_code();
/// Ising: labels 1, psi, sigma.
ModularData ising();

/// Dihedral group of order 2k. Index k' + s*k is t^k' s^s; names 1, t, t2, ..., s, ts, t2s, ...
BasedRing dihedral_ring(int k);
/// Tambara-Yamagami ring of Z_k: labels 1, g, ..., g^{k-1}, T.
BasedRing tambara_yamagami(int k);

/// Modules of the Z2-orbifold of the A_{2n} lattice VOA (prefix "L") or of the
/// orthogonal complement (prefix "K", conjugate twists). Labels
/// P+, P-, P1..Pn, PT+, PT- for prefix P.
ModularData a2n_side(int n, bool complement);

}  // namespace fuscond
