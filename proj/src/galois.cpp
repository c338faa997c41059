#include "fuscond/galois.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "fuscond/errors.h"

namespace fuscond {

namespace {

std::string format_value(const Scalar& v) {
  if (auto k = v.to_integer(1e-9)) return std::to_string(*k);
  std::ostringstream os;
  os.precision(8);
  os << to_double(v.real_part());
  return os.str();
}

std::string block_label(const CondensationBundle& b, const SchurWeylReport& sw, std::size_t k) {
  if (sw.matches[k].x) return b.ambient.labels()[*sw.matches[k].x];
  return "W" + std::to_string(k);
}

std::string members_label(const BasedRing& ring, const Subring& sub) {
  std::string out = "{";
  for (std::size_t i = 0; i < sub.members.size(); ++i) {
    if (i) out += ",";
    out += ring.name(sub.members[i]);
  }
  return out + "}";
}

// Block index of the dual module, when both are matched.
std::optional<std::size_t> dual_block(const CondensationBundle& b, const SchurWeylReport& sw, std::size_t k) {
  if (!sw.matches[k].x) return std::nullopt;
  return block_of(sw, b.ambient.dual(*sw.matches[k].x));
}

std::size_t unit_block(const SchurWeylReport& sw) {
  if (auto k = block_of(sw, 0)) return *k;
  if (sw.trivial_block) return *sw.trivial_block;
  throw NumericalError("no block carries the dimension character");
}

}  // namespace

std::vector<Subring> lattice(const CondensationBundle& b) { return enumerate_subrings(b.module_ring, b.local); }

std::vector<long long> invariant_subalgebra(const CondensationBundle& b, const SchurWeylReport& sw,
                                            const Subring& sub) {
  AssocAlgebra alg = AssocAlgebra::from_ring(b.module_ring);
  const Element e = e_sub(b, sub);
  std::vector<long long> out;
  out.reserve(sw.blocks.size());
  for (const auto& block : sw.blocks) {
    const Complex v = normalized_block_trace(alg, block, e);
    if (to_double(abs(Complex(Real(0), v.imag()))) > settings().round_tol) {
      throw NumericalError("block trace of e^B has imaginary part " + to_string(v, 12));
    }
    auto k = round_to_integer(v.real(), settings().round_tol);
    if (!k) throw NumericalError("block trace of e^B is not an integer: " + to_string(v, 12));
    out.push_back(*k);
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] < 0 || out[k] > sw.blocks[k].m) {
      throw TheoremViolation("invariant multiplicity " + std::to_string(out[k]) + " outside [0, " +
                             std::to_string(sw.blocks[k].m) + "] on " + block_label(b, sw, k));
    }
    if (auto d = dual_block(b, sw, k); d && out[*d] != out[k]) {
      throw TheoremViolation("invariant multiplicities are not self-dual at " + block_label(b, sw, k));
    }
  }
  if (out[unit_block(sw)] != 1) throw TheoremViolation("invariant subalgebra is not connected");
  return out;
}

std::optional<std::size_t> GaloisReport::find(const Subring& sub) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].sub == sub) return i;
  }
  return std::nullopt;
}

GaloisReport verify_correspondence(const CondensationBundle& b, const SchurWeylReport& sw) {
  GaloisReport g;
  const double tol = settings().tol;
  const Complex dimC = b.ambient.global_dim().to_complex();
  const Complex dA = b.algebra_dim().to_complex();
  auto subs = lattice(b);
  std::sort(subs.begin(), subs.end(), [](const Subring& x, const Subring& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.members < y.members;
  });

  double worst_formula = 0;
  for (const auto& sub : subs) {
    LatticeEntry entry;
    entry.sub = sub;
    entry.n_prime = invariant_subalgebra(b, sw, sub);
    entry.dim_b = subring_dim(b.module_ring, b.dA, sub);
    Scalar d(0);
    for (std::size_t k = 0; k < entry.n_prime.size(); ++k) {
      if (entry.n_prime[k] != 0) d += Scalar(static_cast<int>(entry.n_prime[k])) * sw.matches[k].dim_x;
    }
    entry.d_inv = d;
    if (d.real_part() <= 0) throw TheoremViolation("d(A^B) is not positive for " + members_label(b.module_ring, sub));
    const Complex want = dimC / (dA * d.to_complex());
    entry.formula_residual = to_double(abs(entry.dim_b.to_complex() - want));
    worst_formula = std::max(worst_formula, entry.formula_residual);
    if (entry.formula_residual > tol) {
      g.checks.fail("dimension-formula", sub.members,
                    "dim B = " + format_value(entry.dim_b) + " but dim C/(d(A) d(A^B)) = " + to_string(want, 12),
                    entry.formula_residual);
    }
    g.entries.push_back(std::move(entry));
  }
  if (worst_formula <= tol) g.checks.pass("dimension-formula", "dim B = dim C/(d(A) d(A^B))", worst_formula);

  // Bijectivity: each e^B lies in eK, where the action is faithful, and the e^B differ.
  {
    const Element& el = sw.e_local;
    std::vector<Element> es;
    double absorb = 0;
    for (const auto& entry : g.entries) {
      Element e = e_sub(b, entry.sub);
      absorb = std::max(absorb, to_double(max_abs(multiply(b.module_ring, el, e) - e)));
      es.push_back(std::move(e));
    }
    bool distinct = true;
    for (std::size_t i = 0; i < es.size() && distinct; ++i) {
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        if (to_double(max_abs(es[i] - es[j])) < 1e-6) {
          distinct = false;
          break;
        }
      }
    }
    g.bijective = distinct && absorb <= tol;
    if (g.bijective) {
      g.checks.pass("bijective", "e^B distinct and absorbed by the local idempotent", absorb);
    } else {
      g.checks.fail("bijective", {}, "e^B not distinct or not absorbed", absorb);
    }
    std::set<std::vector<long long>> seen;
    for (const auto& entry : g.entries) seen.insert(entry.n_prime);
    g.multiplicities_distinct = seen.size() == g.entries.size();
  }

  // Order reversal on strictly comparable pairs.
  g.order_reversing = true;
  for (std::size_t i = 0; i < g.entries.size(); ++i) {
    for (std::size_t j = 0; j < g.entries.size(); ++j) {
      if (i == j || !g.entries[i].sub.is_subset_of(g.entries[j].sub)) continue;
      const auto& small = g.entries[i].n_prime;
      const auto& large = g.entries[j].n_prime;
      bool le = true;
      for (std::size_t k = 0; k < small.size(); ++k) le = le && large[k] <= small[k];
      const bool strict = to_double(g.entries[j].d_inv.real_part()) < to_double(g.entries[i].d_inv.real_part()) - tol;
      if (!le || !strict) {
        g.order_reversing = false;
        g.checks.fail("order-reversal", {i, j},
                      members_label(b.module_ring, g.entries[i].sub) + " inside " +
                          members_label(b.module_ring, g.entries[j].sub) + " but n' does not decrease");
      }
    }
  }
  if (g.order_reversing) g.checks.pass("order-reversal", "B1 inside B2 implies A^B2 strictly inside A^B1");

  // Endpoints: A^local = A and A^full = 1.
  {
    g.endpoints = true;
    auto lo = g.find(b.local);
    std::vector<std::size_t> all(b.module_ring.rank());
    std::iota(all.begin(), all.end(), std::size_t{0});
    auto hi = g.find(Subring(all));
    if (!lo || !hi) {
      g.endpoints = false;
    } else {
      const std::size_t u = unit_block(sw);
      for (std::size_t k = 0; k < sw.blocks.size(); ++k) {
        if (g.entries[*lo].n_prime[k] != sw.blocks[k].m) g.endpoints = false;
        if (g.entries[*hi].n_prime[k] != (k == u ? 1 : 0)) g.endpoints = false;
      }
    }
    if (g.endpoints) {
      g.checks.pass("endpoints", "A^local = A, A^full = 1");
    } else {
      g.checks.fail("endpoints", {}, "A^local != A or A^full != 1");
    }
  }

  // Hasse diagram: transitive reduction of strict inclusion.
  for (std::size_t i = 0; i < g.entries.size(); ++i) {
    for (std::size_t j = 0; j < g.entries.size(); ++j) {
      if (i == j || !g.entries[i].sub.is_subset_of(g.entries[j].sub)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < g.entries.size() && covered; ++k) {
        if (k == i || k == j) continue;
        if (g.entries[i].sub.is_subset_of(g.entries[k].sub) && g.entries[k].sub.is_subset_of(g.entries[j].sub)) {
          covered = false;
        }
      }
      if (covered) g.hasse.emplace_back(i, j);
    }
  }
  return g;
}

std::string describe_multiplicities(const CondensationBundle& b, const SchurWeylReport& sw,
                                    const std::vector<long long>& n_prime) {
  std::vector<std::pair<std::string, long long>> terms;
  for (std::size_t k = 0; k < n_prime.size(); ++k) {
    if (n_prime[k] != 0) terms.emplace_back(block_label(b, sw, k), n_prime[k]);
  }
  std::sort(terms.begin(), terms.end());
  std::string out;
  for (const auto& [name, c] : terms) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + " ";
    out += name;
  }
  return out;
}

std::string galois_markdown(const CondensationBundle& b, const SchurWeylReport& sw, const GaloisReport& g) {
  std::ostringstream os;
  os << "| B | dim B | A^B | d(A^B) | residual |\n|---|---|---|---|---|\n";
  for (const auto& e : g.entries) {
    os << "| " << members_label(b.module_ring, e.sub) << " | " << format_value(e.dim_b) << " | "
       << describe_multiplicities(b, sw, e.n_prime) << " | " << format_value(e.d_inv) << " | ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", e.formula_residual);
    os << buf << " |\n";
  }
  os << "\nlattice size: " << g.entries.size() << "\n";
  os << "bijective: " << (g.bijective ? "yes" : "no") << "\n";
  os << "multiplicity vectors distinct: " << (g.multiplicities_distinct ? "yes" : "no") << "\n";
  os << "order reversing: " << (g.order_reversing ? "yes" : "no") << "\n";
  os << "endpoints: " << (g.endpoints ? "yes" : "no") << "\n";
  return os.str();
}

std::string galois_dot(const CondensationBundle& b, const SchurWeylReport& sw, const GaloisReport& g) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.entries.size(); ++i) {
    const auto& e = g.entries[i];
    os << "  n" << i << " [label=\"" << members_label(b.module_ring, e.sub) << " (" << format_value(e.dim_b)
       << ") \xE2\x86\x94 " << describe_multiplicities(b, sw, e.n_prime) << " (" << format_value(e.d_inv)
       << ")\"];\n";
  }
  for (const auto& [lo, hi] : g.hasse) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string group_name(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  auto order = [&](std::size_t x) {
    std::size_t k = 1, y = x;
    while (y != 0) {
      y = table[y][x];
      ++k;
      if (k > n) return std::size_t{0};
    }
    return k;
  };
  std::vector<std::size_t> orders(n);
  for (std::size_t x = 0; x < n; ++x) orders[x] = order(x);
  if (std::find(orders.begin(), orders.end(), n) != orders.end()) return "Z" + std::to_string(n);
  bool abelian = true;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) abelian = abelian && table[x][y] == table[y][x];
  }
  const bool exponent_two = std::all_of(orders.begin() + 1, orders.end(), [](std::size_t o) { return o == 2; });
  if (abelian && exponent_two && n > 1) {
    int k = 0;
    for (std::size_t m = n; m > 1; m /= 2) ++k;
    return "Z2^" + std::to_string(k);
  }
  if (n % 2 == 0 && n >= 6) {
    const std::size_t m = n / 2;
    for (std::size_t r = 0; r < n; ++r) {
      if (orders[r] != m) continue;
      std::vector<bool> in_rot(n, false);
      for (std::size_t y = 0, i = 0; i < m; ++i, y = table[y][r]) in_rot[y] = true;
      for (std::size_t s = 0; s < n; ++s) {
        if (in_rot[s] || orders[s] != 2) continue;
        // s r s = r^-1, i.e. (s r)^2 = 1.
        const std::size_t sr = table[s][r];
        if (table[sr][sr] == 0) return "D" + std::to_string(n);
      }
    }
  }
  return "G" + std::to_string(n);
}

std::optional<GroupTable> group_quotient(const CondensationBundle& b, const SchurWeylReport& sw) {
  const BasedRing& ring = b.module_ring;
  const std::size_t s = ring.rank();
  std::vector<std::size_t> parent(s);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t y = 0; y < s; ++y) {
    for (std::size_t w : b.local.members) {
      for (const auto& [z, c] : ring.product(y, w)) {
        const std::size_t a = find(y), bz = find(z);
        if (a != bz) parent[std::max(a, bz)] = std::min(a, bz);
      }
    }
  }
  std::vector<std::size_t> reps;
  for (std::size_t y = 0; y < s; ++y) {
    if (find(y) == y) reps.push_back(y);
  }
  std::vector<Element> gbar;
  for (std::size_t y : reps) {
    Element basis(s);
    basis[y] = Complex(1);
    gbar.push_back(scale(multiply(ring, sw.e_local, basis), Complex(1) / b.dA[y].to_complex()));
  }
  const double tol = settings().tol;
  GroupTable gt;
  for (std::size_t y : reps) gt.elements.push_back(ring.name(y));
  gt.table.assign(reps.size(), std::vector<std::size_t>(reps.size(), 0));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      Element p = multiply(ring, gbar[i], gbar[j]);
      std::optional<std::size_t> hit;
      for (std::size_t k = 0; k < reps.size(); ++k) {
        if (to_double(max_abs(p - gbar[k])) < tol) {
          hit = k;
          break;
        }
      }
      if (!hit) return std::nullopt;
      gt.table[i][j] = *hit;
    }
  }
  gt.name = group_name(gt.table);
  return gt;
}

GroupTable pointed_subgroup(const BasedRing& ring) {
  GroupTable gt;
  auto inv = invertible_elements(ring);
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    pos[inv[i]] = i;
    gt.elements.push_back(ring.name(inv[i]));
  }
  gt.table.assign(inv.size(), std::vector<std::size_t>(inv.size(), 0));
  for (std::size_t i = 0; i < inv.size(); ++i) {
    for (std::size_t j = 0; j < inv.size(); ++j) gt.table[i][j] = pos.at(ring.product(inv[i], inv[j]).front().first);
  }
  gt.name = group_name(gt.table);
  return gt;
}

}  // namespace fuscond
