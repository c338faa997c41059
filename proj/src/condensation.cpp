#include "fuscond/condensation.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuscond/errors.h"

namespace fuscond {

Ambient Ambient::from_modular(ModularData md) {
  Ambient a;
  a.kind_ = Kind::Modular;
  a.labels_ = md.labels();
  a.dual_ = md.duals();
  a.dims_ = md.dims();
  a.twists_ = md.twists();
  a.ring_ = md.fusion_ring();
  a.factors_.push_back(std::move(md));
  return a;
}

Ambient Ambient::from_factors(std::vector<ModularData> factors, const std::string& separator) {
  if (factors.empty()) throw StructuralError("a product ambient needs at least one factor");
  if (factors.size() == 1) return from_modular(std::move(factors[0]));
  Ambient a;
  a.kind_ = Kind::Product;
  a.separator_ = separator;
  BasedRing ring = factors[0].fusion_ring();
  ScalarVector dims = factors[0].dims().values;
  ScalarVector twists = factors[0].twists();
  for (std::size_t f = 1; f < factors.size(); ++f) {
    ring = deligne_product(ring, factors[f].fusion_ring(), separator);
    ScalarVector d2, t2;
    const auto fd = factors[f].dims().values;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      for (std::size_t j = 0; j < fd.size(); ++j) {
        d2.push_back(dims[i] * fd[j]);
        t2.push_back(twists[i] * factors[f].twist(j));
      }
    }
    dims = std::move(d2);
    twists = std::move(t2);
  }
  a.labels_ = ring.names();
  a.dual_ = ring.duals();
  a.dims_.values = std::move(dims);
  a.dims_.source = DimSource::Supplied;
  a.twists_ = std::move(twists);
  a.ring_ = std::move(ring);
  a.factors_ = std::move(factors);
  return a;
}

Ambient Ambient::from_ring(BasedRing ring, DimVector dims, std::optional<ScalarVector> twists) {
  if (dims.size() != ring.rank()) throw StructuralError("ambient dims do not match the ring rank");
  if (twists && twists->size() != ring.rank()) {
    throw StructuralError("ambient twists do not match the ring rank");
  }
  Ambient a;
  a.kind_ = Kind::Ring;
  a.labels_ = ring.names();
  a.dual_ = ring.duals();
  a.dims_ = std::move(dims);
  a.twists_ = std::move(twists);
  a.ring_ = std::move(ring);
  return a;
}

Ambient Ambient::from_dims(std::vector<std::string> labels, std::vector<std::size_t> dual,
                           DimVector dims, std::optional<ScalarVector> twists) {
  const std::size_t r = labels.size();
  if (r == 0) throw StructuralError("ambient needs at least one label");
  if (dual.size() != r || dims.size() != r) {
    throw StructuralError("ambient labels, duals and dims differ in length");
  }
  if (twists && twists->size() != r) throw StructuralError("ambient twists have the wrong length");
  for (std::size_t d : dual) {
    if (d >= r) throw StructuralError("ambient dual index out of range");
  }
  Ambient a;
  a.kind_ = Kind::Dims;
  a.labels_ = std::move(labels);
  a.dual_ = std::move(dual);
  a.dims_ = std::move(dims);
  a.twists_ = std::move(twists);
  return a;
}

std::size_t Ambient::index_of(const std::string& name) const {
  auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) throw StructuralError("unknown ambient label '" + name + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> Ambient::split_index(std::size_t x) const {
  std::vector<std::size_t> parts(factors_.size());
  for (std::size_t f = factors_.size(); f-- > 0;) {
    parts[f] = x % factors_[f].rank();
    x /= factors_[f].rank();
  }
  return parts;
}

Scalar Ambient::s(std::size_t x, std::size_t y) const {
  if (!has_s()) throw CapabilityError("ambient has no S-matrix");
  auto px = split_index(x), py = split_index(y);
  Scalar out(1);
  for (std::size_t f = 0; f < factors_.size(); ++f) out *= factors_[f].s(px[f], py[f]);
  return out;
}

Scalar Ambient::global_dim() const {
  if (!factors_.empty()) {
    Scalar out(1);
    for (const auto& f : factors_) out *= f.global_dim();
    return out;
  }
  Scalar total(0);
  for (const auto& d : dims_.values) total += d * d;
  return total;
}

Scalar CondensationBundle::algebra_dim() const {
  Scalar total(0);
  for (std::size_t x = 0; x < mult.size(); ++x) {
    if (mult[x] != 0) total += Scalar(mult[x]) * ambient.dims()[x];
  }
  return total;
}

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

}  // namespace

ValidationReport check_bundle(const CondensationBundle& b) {
  ValidationReport report;
  const double tol = settings().tol;
  const Ambient& amb = b.ambient;
  const std::size_t r = amb.rank();
  const std::size_t s = b.module_ring.rank();

  if (amb.kind() == Ambient::Kind::Modular || amb.kind() == Ambient::Kind::Product) {
    for (std::size_t f = 0; f < amb.factors().size(); ++f) {
      report.merge(validate(amb.factors()[f], tol), "ambient[" + idx(f) + "].");
    }
  } else if (amb.ring()) {
    report.merge(validate(*amb.ring()), "ambient.");
    report.merge(check_dims(*amb.ring(), amb.dims(), tol), "ambient.");
  } else {
    bool ok = true;
    for (std::size_t x = 0; x < r; ++x) {
      if (amb.dual(amb.dual(x)) != x) {
        report.fail("ambient.dual-involution", {x}, "dual(dual(x)) != x");
        ok = false;
      }
      if (amb.dims()[x].real_part() <= 0) {
        report.fail("ambient.dims-positive", {x}, "d = " + amb.dims()[x].to_string());
        ok = false;
      }
    }
    if (ok) report.pass("ambient.dims", "dims-only ambient: positivity and duals");
  }

  report.merge(validate(b.module_ring), "module-ring.");
  report.merge(check_dims(b.module_ring, b.dA, tol), "module-ring.");

  if (b.mult.size() != r) {
    report.fail("mult-length", {}, "mult has " + idx(b.mult.size()) + " entries, ambient rank " + idx(r));
    return report;
  }
  bool nonneg = true;
  for (std::size_t x = 0; x < r; ++x) {
    if (b.mult[x] < 0) {
      report.fail("mult-nonnegative", {x}, "n = " + std::to_string(b.mult[x]));
      nonneg = false;
    }
  }
  if (nonneg) report.pass("mult-nonnegative");
  if (b.mult[0] != 1) {
    report.fail("connected", {0}, "[1, A] = " + std::to_string(b.mult[0]));
  } else {
    report.pass("connected", "[1, A] = 1");
  }

  std::size_t before = report.violations.size();
  for (std::size_t x = 0; x < r; ++x) {
    if (b.mult[x] != b.mult[amb.dual(x)]) {
      report.fail("self-dual", {x}, "n_x != n_{x*}");
    }
  }
  if (report.violations.size() == before) report.pass("self-dual");

  if (amb.twists()) {
    before = report.violations.size();
    for (std::size_t x = 0; x < r; ++x) {
      if (b.mult[x] > 0 && !(*amb.twists())[x].equals(Scalar(1), tol)) {
        report.fail("trivial-twist", {x}, amb.labels()[x] + " has theta = " + (*amb.twists())[x].to_string());
      }
    }
    if (report.violations.size() == before) report.pass("trivial-twist");
  }

  const Scalar dA = b.algebra_dim();
  if (dA.real_part() <= 0) {
    report.fail("positive-dimension", {}, "d(A) = " + dA.to_string());
    return report;
  }
  report.pass("positive-dimension", "d(A) = " + dA.to_string());

  const Scalar dimC = amb.global_dim();
  Scalar dimCA(0);
  for (std::size_t y = 0; y < s; ++y) dimCA += b.dA[y] * b.dA[y];
  {
    const Scalar want = dimC / dA;
    const double res = dimCA.distance(want);
    if (res > tol) {
      report.fail("module-dimension", {}, "dim C_A = " + dimCA.to_string() + ", dim C/d(A) = " + want.to_string(), res);
    } else {
      report.pass("module-dimension", "dim C_A = " + dimCA.to_string(), res);
    }
  }

  if (!is_subring(b.module_ring, b.local)) {
    report.fail("local-subring", b.local.members, "local simples are not closed under fusion and dual");
  } else {
    report.pass("local-subring");
    const Scalar dl = subring_dim(b.module_ring, b.dA, b.local);
    const Scalar want = dimC / (dA * dA);
    const double res = dl.distance(want);
    if (res > tol) {
      report.fail("local-dimension", {}, "dim local = " + dl.to_string() + ", dim C/d(A)^2 = " + want.to_string(), res);
    } else {
      report.pass("local-dimension", "dim local = " + dl.to_string(), res);
    }
  }

  if (b.induction) {
    const auto& m = *b.induction;
    bool shape = m.size() == r;
    for (const auto& row : m) shape = shape && row.size() == s;
    if (!shape) {
      report.fail("induction-shape", {}, "induction matrix must be ambient rank x module rank");
      return report;
    }
    before = report.violations.size();
    double worst = 0;
    for (std::size_t x = 0; x < r; ++x) {
      Scalar acc(0);
      for (std::size_t y = 0; y < s; ++y) {
        if (m[x][y] < 0) report.fail("induction-nonnegative", {x, y}, "negative multiplicity");
        if (m[x][y] != 0) acc += Scalar(m[x][y]) * b.dA[y];
      }
      const double res = acc.distance(amb.dims()[x]);
      worst = std::max(worst, res);
      if (res > tol) report.fail("induction-dimension", {x}, "sum_Y M d_A(Y) != d(x)", res);
      if (m[x][0] != b.mult[x]) {
        report.fail("induction-adjunction", {x},
                    "[alpha(x), 1] = " + std::to_string(m[x][0]) + " but n_x = " + std::to_string(b.mult[x]));
      }
    }
    if (report.violations.size() == before) {
      report.pass("induction", "dimension and adjunction identities", worst);
    }
  }
  return report;
}

Element e_sub(const CondensationBundle& b, const Subring& sub) {
  const std::size_t s = b.module_ring.rank();
  Element e(s);
  Real total = 0;
  for (std::size_t y : sub.members) total += norm(b.dA[y].to_complex());
  for (std::size_t y : sub.members) e[y] = b.dA[y].to_complex() / total;
  return e;
}

double idempotent_residual(const CondensationBundle& b, const Element& e) {
  return to_double(max_abs(multiply(b.module_ring, e, e) - e));
}

double central_residual(const CondensationBundle& b, const Element& e) {
  double worst = 0;
  const std::size_t s = b.module_ring.rank();
  for (std::size_t y = 0; y < s; ++y) {
    Element basis(s);
    basis[y] = Complex(1);
    Element d = multiply(b.module_ring, e, basis) - multiply(b.module_ring, basis, e);
    worst = std::max(worst, to_double(max_abs(d)));
  }
  return worst;
}

namespace {

// Character values at alpha(y) for every ambient label y.
std::vector<Complex> induced_character(const std::vector<Complex>& chi,
                                       const std::vector<std::vector<int>>& induction) {
  std::vector<Complex> out;
  out.reserve(induction.size());
  for (const auto& row : induction) {
    Complex acc;
    for (std::size_t y = 0; y < row.size(); ++y) {
      if (row[y] != 0) acc += chi[y] * Real(row[y]);
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace

SchurWeylReport schur_weyl(const CondensationBundle& b) {
  SchurWeylReport sw;
  const double tol = settings().tol;
  const std::size_t s = b.module_ring.rank();
  const std::size_t r = b.ambient.rank();
  sw.rank = s;
  AssocAlgebra alg = AssocAlgebra::from_ring(b.module_ring);
  sw.profile = central_idempotents(alg);
  sw.e_local = e_sub(b, b.local);

  // Blocks of the ideal e K are the blocks on which e acts as the identity.
  for (const auto& block : sw.profile.blocks) {
    Complex v = normalized_block_trace(alg, block, sw.e_local) / Real(block.m);
    if (to_double(abs(v - Complex(1))) < 1e-6) {
      sw.blocks.push_back(block);
    } else if (to_double(abs(v)) > 1e-6) {
      throw NumericalError("local idempotent acts on a block by " + to_string(v, 12));
    }
  }
  for (const auto& block : sw.blocks) {
    sw.ideal_dim += block.block_dim;
    sw.block_m.push_back(block.m);
    sw.characters.push_back(block_character(alg, block));
  }
  sw.kernel_dim = static_cast<long long>(s) - sw.ideal_dim;
  for (std::size_t x = 0; x < r; ++x) {
    if (b.mult[x] > 0) {
      sw.sum_n_squared += static_cast<long long>(b.mult[x]) * b.mult[x];
      sw.expected_m.push_back(b.mult[x]);
    }
  }
  std::sort(sw.block_m.begin(), sw.block_m.end());
  std::sort(sw.expected_m.begin(), sw.expected_m.end());

  sw.checks.pass("idempotents", "orthogonality/completeness/centrality",
                 std::max({sw.profile.orthogonality, sw.profile.completeness, sw.profile.centrality}));
  {
    const Complex tr = alg.regular_trace(sw.e_local);
    const double res = to_double(abs(tr - Complex(Real(sw.ideal_dim))));
    if (res > 1e-6) {
      sw.checks.fail("ideal-trace", {}, "Tr(e) = " + to_string(tr, 12), res);
    } else {
      sw.checks.pass("ideal-trace", "dim eK = " + std::to_string(sw.ideal_dim), res);
    }
  }

  // Trivial block: character equal to the dimension character d_A.
  for (std::size_t k = 0; k < sw.blocks.size(); ++k) {
    if (sw.blocks[k].m != 1) continue;
    double res = 0;
    for (std::size_t y = 0; y < s; ++y) {
      res = std::max(res, to_double(abs(sw.characters[k][y] - b.dA[y].to_complex())));
    }
    if (res < 1e-6) sw.trivial_block = k;
  }

  sw.matches.assign(sw.blocks.size(), BlockMatch{});
  for (std::size_t k = 0; k < sw.blocks.size(); ++k) sw.matches[k].m = sw.blocks[k].m;
  if (b.ambient.has_s() && b.induction) {
    std::vector<std::size_t> candidates;
    for (std::size_t x = 0; x < r; ++x) {
      if (b.mult[x] > 0) candidates.push_back(x);
    }
    // Expected pattern y -> S[x*][y] / d(x) at the induction columns.
    std::vector<std::vector<Complex>> pattern;
    for (std::size_t x : candidates) {
      const Complex dx = b.ambient.dims()[x].to_complex();
      std::vector<Complex> row;
      row.reserve(r);
      for (std::size_t y = 0; y < r; ++y) row.push_back(b.ambient.s(b.ambient.dual(x), y).to_complex() / dx);
      pattern.push_back(std::move(row));
    }
    bool all = true;
    for (std::size_t k = 0; k < sw.blocks.size(); ++k) {
      auto induced = induced_character(sw.characters[k], *b.induction);
      double best = 1e300, second = 1e300;
      std::size_t best_x = 0;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        Real acc = 0;
        for (std::size_t y = 0; y < r; ++y) acc += norm(induced[y] / Real(sw.blocks[k].m) - pattern[c][y]);
        const double res = to_double(boost::multiprecision::sqrt(acc / Real(static_cast<long>(r))));
        if (res < best) {
          second = best;
          best = res;
          best_x = candidates[c];
        } else if (res < second) {
          second = res;
        }
      }
      BlockMatch& bm = sw.matches[k];
      bm.best_residual = best;
      bm.second_residual = candidates.size() > 1 ? second : 1e300;
      if (best < 1e-6 && bm.second_residual > 1e-3 && b.mult[best_x] == sw.blocks[k].m) {
        bm.x = best_x;
        bm.dim_x = b.ambient.dims()[best_x];
      } else {
        all = false;
        sw.checks.fail("block-match", {k},
                       "no unique label fits (best " + std::to_string(best) + ", second " +
                           std::to_string(bm.second_residual) + ")",
                       best);
      }
    }
    sw.matched = all && !sw.blocks.empty();
    if (sw.matched) {
      std::vector<std::size_t> xs;
      double worst = 0;
      for (const auto& bm : sw.matches) {
        xs.push_back(*bm.x);
        worst = std::max(worst, bm.best_residual);
      }
      std::sort(xs.begin(), xs.end());
      if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) {
        sw.matched = false;
        sw.checks.fail("block-match-injective", {}, "two blocks matched to the same label");
      } else {
        sw.checks.pass("block-match", "indicator at alpha(y) = n_x S[x*][y]/d(x)", worst);
      }
    }
  } else {
    sw.checks.pass("block-match", "skipped: ambient S-matrix or induction unavailable");
  }

  // Indicator of local simples: chi(Y) = d_A(Y) on every block of eK.
  {
    double worst = 0;
    for (std::size_t k = 0; k < sw.blocks.size(); ++k) {
      for (std::size_t y : b.local.members) {
        const Complex want = b.dA[y].to_complex() * Real(sw.blocks[k].m);
        worst = std::max(worst, to_double(abs(sw.characters[k][y] - want)));
      }
    }
    if (worst > tol) {
      sw.checks.fail("local-indicator", {}, "indicator at local Y differs from n_x d_A(Y)", worst);
    } else {
      sw.checks.pass("local-indicator", "indicator(x, Y) = n_x d_A(Y) for local Y", worst);
    }
  }

  // sum over blocks of m chi(a) = Tr(left_mult(e a)).
  {
    double worst = 0;
    for (std::size_t y = 0; y < s; ++y) {
      Element ey = alg.multiply(sw.e_local, alg.basis_element(y));
      Complex lhs;
      for (std::size_t k = 0; k < sw.blocks.size(); ++k) lhs += sw.characters[k][y] * Real(sw.blocks[k].m);
      worst = std::max(worst, to_double(abs(lhs - alg.regular_trace(ey))));
    }
    if (worst > tol) {
      sw.checks.fail("trace-decomposition", {}, "sum m chi != Tr(e a)", worst);
    } else {
      sw.checks.pass("trace-decomposition", "sum_x n_x chi_x(a) = Tr(left_mult(e a))", worst);
    }
  }

  // One-dimensional blocks carry ring homomorphisms.
  {
    double worst = 0;
    for (std::size_t k = 0; k < sw.blocks.size(); ++k) {
      if (sw.blocks[k].m != 1) continue;
      const auto& chi = sw.characters[k];
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
          Complex prod;
          for (const auto& [l, n] : b.module_ring.product(i, j)) prod += chi[l] * Real(n);
          worst = std::max(worst, to_double(abs(prod - chi[i] * chi[j])));
        }
      }
    }
    if (worst > tol) {
      sw.checks.fail("linear-characters", {}, "n_x = 1 character is not multiplicative", worst);
    } else {
      sw.checks.pass("linear-characters", "n_x = 1 characters are multiplicative", worst);
    }
  }

  if (sw.kernel_dim != static_cast<long long>(s) - sw.sum_n_squared) {
    std::ostringstream os;
    os << "kernel dimension " << sw.kernel_dim << " but rank - sum n_x^2 = "
       << static_cast<long long>(s) - sw.sum_n_squared;
    sw.checks.fail("kernel-dimension", {}, os.str());
    throw TheoremViolation(os.str());
  }
  sw.checks.pass("kernel-dimension", "kernel_dim = rank - sum n_x^2 = " + std::to_string(sw.kernel_dim));
  if (sw.block_m != sw.expected_m) {
    std::ostringstream os;
    os << "simple dimensions {";
    for (auto m : sw.block_m) os << m << " ";
    os << "} differ from nonzero multiplicities {";
    for (auto m : sw.expected_m) os << m << " ";
    os << "}";
    sw.checks.fail("block-multiset", {}, os.str());
    throw TheoremViolation(os.str());
  }
  sw.checks.pass("block-multiset", "simple dimensions equal the nonzero n_x");

  // Without matching, infer d(x) per block from its formal codegree.
  if (!sw.matched) {
    const Scalar dimC = b.ambient.global_dim();
    const Scalar dA = b.algebra_dim();
    for (std::size_t k = 0; k < sw.blocks.size(); ++k) {
      Complex phi_action;
      for (std::size_t y = 0; y < s; ++y) {
        phi_action += sw.characters[k][y] * sw.characters[k][b.module_ring.dual(y)];
      }
      // chi(phi) = m f with f = dim C/(d(x) d(A)).
      Complex f = phi_action / Real(sw.blocks[k].m);
      sw.matches[k].dim_x = Scalar(Complex(dimC.to_complex() / (dA.to_complex() * f)));
    }
  }
  return sw;
}

std::optional<std::size_t> block_of(const SchurWeylReport& sw, std::size_t x) {
  for (std::size_t k = 0; k < sw.matches.size(); ++k) {
    if (sw.matches[k].x && *sw.matches[k].x == x) return k;
  }
  return std::nullopt;
}

Complex indicator(const CondensationBundle& b, const SchurWeylReport& sw, std::size_t x,
                  const Element& a) {
  if (!sw.matched) {
    throw CapabilityError("indicators by label need an ambient S-matrix and induction data");
  }
  if (x >= b.mult.size() || b.mult[x] == 0) {
    throw StructuralError("label " + std::to_string(x) + " does not occur in A");
  }
  auto k = block_of(sw, x);
  if (!k) throw CapabilityError("no block matched to label " + b.ambient.labels()[x]);
  Complex acc;
  for (std::size_t y = 0; y < a.size(); ++y) acc += a[y] * sw.characters[*k][y];
  return acc;
}

ValidationReport codegree_check(const CondensationBundle& b, const SchurWeylReport& sw) {
  ValidationReport report;
  const double tol = settings().tol;
  const std::size_t s = b.module_ring.rank();
  const Complex dimC = b.ambient.global_dim().to_complex();
  const Complex dA = b.algebra_dim().to_complex();
  for (std::size_t k = 0; k < sw.blocks.size(); ++k) {
    // phi = sum_Y chi(Y) Y*; its trace on W' is sum_Y chi(Y) chi'(Y*).
    const long long m = sw.blocks[k].m;
    const Complex f = dimC / (sw.matches[k].dim_x.to_complex() * dA);
    const std::string who = sw.matches[k].x ? b.ambient.labels()[*sw.matches[k].x] : "block " + std::to_string(k);
    double worst = 0;
    for (std::size_t k2 = 0; k2 < sw.blocks.size(); ++k2) {
      Complex trace;
      for (std::size_t y = 0; y < s; ++y) {
        trace += sw.characters[k][y] * sw.characters[k2][b.module_ring.dual(y)];
      }
      const Complex want = k2 == k ? f * Real(m) : Complex();
      const double res = to_double(abs(trace - want));
      worst = std::max(worst, res);
      if (res > tol) {
        report.fail("codegree", {k, k2},
                    who + ": trace of phi on block " + std::to_string(k2) + " is " + to_string(trace, 12) +
                        ", expected " + to_string(want, 12),
                    res);
      }
    }
    if (worst <= tol) {
      report.pass("codegree", who + ": f = " + to_string(f, 12) + ", trace n_x f = " + to_string(f * Real(m), 12),
                  worst);
    }
  }
  return report;
}

}  // namespace fuscond
