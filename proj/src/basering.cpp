#include "fuscond/basering.h"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "fuscond/errors.h"

namespace fuscond {

BasedRing::BasedRing(std::vector<std::string> names, std::vector<std::size_t> dual,
                     std::vector<int> fusion)
    : dual_(std::move(dual)), fusion_(std::move(fusion)) {
  const std::size_t r = names.size();
  if (r == 0) throw StructuralError("a based ring needs at least one label");
  if (dual_.size() != r) {
    throw StructuralError("dual has length " + std::to_string(dual_.size()) + ", expected " +
                          std::to_string(r));
  }
  if (fusion_.size() != r * r * r) {
    throw StructuralError("fusion tensor has " + std::to_string(fusion_.size()) +
                          " entries, expected rank^3 = " + std::to_string(r * r * r));
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (dual_[i] >= r) throw StructuralError("dual index out of range at label " + std::to_string(i));
  }
  std::set<std::string> seen;
  labels_.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!seen.insert(names[i]).second) throw StructuralError("duplicate label '" + names[i] + "'");
    labels_.push_back({i, std::move(names[i])});
  }
  products_.resize(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      auto& terms = products_[i * r + j];
      for (std::size_t k = 0; k < r; ++k) {
        int v = fusion_[(i * r + j) * r + k];
        if (v != 0) terms.emplace_back(k, v);
      }
    }
  }
}

std::vector<std::string> BasedRing::names() const {
  std::vector<std::string> out;
  out.reserve(rank());
  for (const auto& l : labels_) out.push_back(l.name);
  return out;
}

std::size_t BasedRing::index_of(std::string_view name) const {
  for (const auto& l : labels_) {
    if (l.name == name) return l.index;
  }
  throw StructuralError("unknown label '" + std::string(name) + "'");
}

bool operator==(const BasedRing& a, const BasedRing& b) {
  return a.names() == b.names() && a.dual_ == b.dual_ && a.fusion_ == b.fusion_;
}

bool ValidationReport::has_violation(std::string_view check,
                                     const std::vector<std::size_t>& where) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Finding& f) { return f.check == check && f.where == where; });
}

bool ValidationReport::has_violation(std::string_view check) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Finding& f) { return f.check == check; });
}

void ValidationReport::fail(std::string check, std::vector<std::size_t> where, std::string detail,
                            double residual) {
  violations.push_back({std::move(check), std::move(where), std::move(detail), residual});
}

void ValidationReport::pass(std::string check, std::string detail, double residual) {
  passed.push_back({std::move(check), {}, std::move(detail), residual});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (auto f : other.violations) {
    f.check = prefix + f.check;
    violations.push_back(std::move(f));
  }
  for (auto f : other.passed) {
    f.check = prefix + f.check;
    passed.push_back(std::move(f));
  }
}

namespace {

std::string tuple_string(const std::vector<std::size_t>& where) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < where.size(); ++i) os << (i ? "," : "") << where[i];
  os << ")";
  return os.str();
}

std::string residual_string(double r) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << r;
  return os.str();
}

}  // namespace

std::string ValidationReport::to_markdown() const {
  std::ostringstream os;
  os << "| status | check | where | residual | detail |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& f : violations) {
    os << "| FAIL | " << f.check << " | " << tuple_string(f.where) << " | "
       << residual_string(f.residual) << " | " << f.detail << " |\n";
  }
  for (const auto& f : passed) {
    os << "| ok | " << f.check << " | | " << residual_string(f.residual) << " | " << f.detail
       << " |\n";
  }
  os << "\n" << (ok() ? "valid" : std::to_string(violations.size()) + " violation(s)") << "\n";
  return os.str();
}

Subring::Subring(std::vector<std::size_t> m) : members(std::move(m)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool Subring::contains(std::size_t i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

bool Subring::is_subset_of(const Subring& other) const {
  return std::includes(other.members.begin(), other.members.end(), members.begin(),
                       members.end());
}

bool operator<(const Subring& a, const Subring& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members < b.members;
}

ValidationReport validate(const BasedRing& ring) {
  ValidationReport report;
  const std::size_t r = ring.rank();

  auto summarize = [&](const std::string& check, std::size_t before) {
    if (report.violations.size() == before) report.pass(check);
  };

  std::size_t before = report.violations.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        if (ring.N(i, j, k) < 0) {
          report.fail("nonnegativity", {i, j, k}, "N = " + std::to_string(ring.N(i, j, k)));
        }
      }
    }
  }
  summarize("nonnegativity", before);

  before = report.violations.size();
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      const int want = j == k ? 1 : 0;
      if (ring.N(0, j, k) != want) {
        report.fail("unit", {0, j, k}, "N = " + std::to_string(ring.N(0, j, k)));
      }
      if (j != 0 && ring.N(j, 0, k) != want) {
        report.fail("unit", {j, 0, k}, "N = " + std::to_string(ring.N(j, 0, k)));
      }
    }
  }
  summarize("unit", before);

  before = report.violations.size();
  if (ring.dual(0) != 0) report.fail("dual-involution", {0}, "dual(0) != 0");
  for (std::size_t i = 0; i < r; ++i) {
    if (ring.dual(ring.dual(i)) != i) report.fail("dual-involution", {i}, "dual(dual(i)) != i");
  }
  summarize("dual-involution", before);

  before = report.violations.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const int want = j == ring.dual(i) ? 1 : 0;
      if (ring.N(i, j, 0) != want) {
        report.fail("duality", {i, j, 0},
                    "N = " + std::to_string(ring.N(i, j, 0)) + ", expected " + std::to_string(want));
      }
    }
  }
  summarize("duality", before);

  before = report.violations.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        const int a = ring.N(i, j, k);
        const int b = ring.N(ring.dual(j), ring.dual(i), ring.dual(k));
        if (a != b) {
          report.fail("dual-transpose", {i, j, k},
                      "N = " + std::to_string(a) + " but N[j*][i*][k*] = " + std::to_string(b));
        }
      }
    }
  }
  summarize("dual-transpose", before);

  before = report.violations.size();
  std::vector<long long> lhs(r, 0), rhs(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& [m, a] : ring.product(i, j)) {
          for (const auto& [l, b] : ring.product(m, k)) lhs[l] += static_cast<long long>(a) * b;
        }
        for (const auto& [m, a] : ring.product(j, k)) {
          for (const auto& [l, b] : ring.product(i, m)) rhs[l] += static_cast<long long>(a) * b;
        }
        for (std::size_t l = 0; l < r; ++l) {
          if (lhs[l] != rhs[l]) {
            report.fail("associativity", {i, j, k, l},
                        "(ij)k = " + std::to_string(lhs[l]) + ", i(jk) = " + std::to_string(rhs[l]));
          }
        }
      }
    }
  }
  summarize("associativity", before);
  return report;
}

DimVector fp_dims(const BasedRing& ring) {
  const std::size_t r = ring.rank();
  // A[k][j] = sum_i N[i][j][k]: matrix of v -> (sum_i L_i) v.
  std::vector<std::vector<std::pair<std::size_t, long long>>> rows(r);
  {
    std::vector<long long> dense(r * r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        for (const auto& [k, n] : ring.product(i, j)) dense[k * r + j] += n;
      }
    }
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t j = 0; j < r; ++j) {
        if (dense[k * r + j] != 0) rows[k].emplace_back(j, dense[k * r + j]);
      }
    }
  }

  constexpr int kMaxIterations = 10000;
  const Real tol("1e-12");
  std::vector<Real> v(r, Real(1));
  std::vector<Real> next(r);
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    for (std::size_t k = 0; k < r; ++k) {
      Real acc = 0;
      for (const auto& [j, a] : rows[k]) acc += v[j] * a;
      next[k] = std::move(acc);
    }
    if (next[0] <= 0) throw NumericalError("Perron iteration lost positivity at the unit");
    Real scale = next[0];
    Real delta = 0;
    for (std::size_t k = 0; k < r; ++k) {
      next[k] /= scale;
      delta = std::max(delta, boost::multiprecision::abs(next[k] - v[k]) /
                                  std::max(Real(1), boost::multiprecision::abs(next[k])));
    }
    std::swap(v, next);
    if (delta < tol) {
      DimVector out;
      out.source = DimSource::FrobeniusPerron;
      out.values.reserve(r);
      for (auto& x : v) out.values.emplace_back(Complex(x));
      return out;
    }
  }
  throw NumericalError("Perron iteration did not converge within 10000 steps");
}

ValidationReport check_dims(const BasedRing& ring, const DimVector& dims, double tol) {
  ValidationReport report;
  const std::size_t r = ring.rank();
  if (dims.size() != r) {
    report.fail("dims-length", {}, "expected " + std::to_string(r) + " dimensions");
    return report;
  }
  double worst = 0;
  if (!dims[0].equals(Scalar(1), tol)) report.fail("dims-unit", {0}, "d[0] != 1", dims[0].distance(1));
  for (std::size_t i = 0; i < r; ++i) {
    Complex z = dims[i].to_complex();
    if (z.real() <= 0 || boost::multiprecision::abs(z.imag()) > tol) {
      report.fail("dims-positive", {i}, "d = " + dims[i].to_string());
    }
    double dd = dims[i].distance(dims[ring.dual(i)]);
    if (dd > tol) report.fail("dims-dual", {i}, "d[i] != d[dual i]", dd);
    worst = std::max(worst, dd);
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Scalar rhs(0);
      for (const auto& [k, n] : ring.product(i, j)) rhs += Scalar(n) * dims[k];
      double res = (dims[i] * dims[j]).distance(rhs);
      worst = std::max(worst, res);
      if (res > tol) report.fail("dims-homomorphism", {i, j}, "d_i d_j != sum N d_k", res);
    }
  }
  if (report.ok()) report.pass("dims", "homomorphism, unit, dual", worst);
  return report;
}

bool is_subring(const BasedRing& ring, const Subring& sub) {
  if (!sub.contains(0)) return false;
  for (std::size_t i : sub.members) {
    if (i >= ring.rank() || !sub.contains(ring.dual(i))) return false;
  }
  for (std::size_t i : sub.members) {
    for (std::size_t j : sub.members) {
      for (const auto& [k, n] : ring.product(i, j)) {
        if (!sub.contains(k)) return false;
      }
    }
  }
  return true;
}

namespace {

// Closure of `in` (a membership mask, already containing the unit) under dual
// and fusion.
Subring close_mask(const BasedRing& ring, std::vector<char> in) {
  std::vector<std::size_t> members;
  std::deque<std::size_t> pending;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i]) pending.push_back(i);
  }
  auto add = [&](std::size_t k) {
    if (!in[k]) {
      in[k] = 1;
      pending.push_back(k);
    }
  };
  while (!pending.empty()) {
    std::size_t x = pending.front();
    pending.pop_front();
    members.push_back(x);
    add(ring.dual(x));
    for (std::size_t y : members) {
      for (const auto& term : ring.product(x, y)) add(term.first);
      for (const auto& term : ring.product(y, x)) add(term.first);
    }
  }
  return Subring(std::move(members));
}

}  // namespace

Subring subring_generated(const BasedRing& ring, const std::vector<std::size_t>& seeds) {
  std::vector<char> in(ring.rank(), 0);
  in[0] = 1;
  for (std::size_t s : seeds) {
    if (s >= ring.rank()) throw StructuralError("seed index " + std::to_string(s) + " out of range");
    in[s] = 1;
  }
  return close_mask(ring, std::move(in));
}

std::vector<Subring> enumerate_subrings(const BasedRing& ring, const Subring& must_contain) {
  if (ring.rank() > kMaxEnumerationRank) {
    throw CapabilityError("rank " + std::to_string(ring.rank()) + " exceeds the enumeration cap of " +
                          std::to_string(kMaxEnumerationRank) + "; use subring_generated instead");
  }
  if (!is_subring(ring, must_contain)) {
    throw StructuralError("must_contain is not a subring");
  }
  // Every subring is generated by adding elements one at a time to a smaller
  // subring, so growing from must_contain by single labels reaches them all.
  std::set<Subring> found{must_contain};
  std::deque<Subring> frontier{must_contain};
  while (!frontier.empty()) {
    Subring s = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t l = 0; l < ring.rank(); ++l) {
      if (s.contains(l)) continue;
      std::vector<char> in(ring.rank(), 0);
      for (std::size_t m : s.members) in[m] = 1;
      in[l] = 1;
      Subring t = close_mask(ring, std::move(in));
      if (found.insert(t).second) frontier.push_back(std::move(t));
    }
  }
  return {found.begin(), found.end()};
}

Scalar subring_dim(const BasedRing& ring, const DimVector& dims, const Subring& sub) {
  (void)ring;
  Scalar total(0);
  for (std::size_t i : sub.members) total += dims[i] * dims[i];
  return total;
}

BasedRing group_ring(const std::vector<std::vector<std::size_t>>& table,
                     std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw StructuralError("empty group table");
  if (names.empty()) {
    names.push_back("e");
    for (std::size_t g = 1; g < n; ++g) names.push_back("g" + std::to_string(g));
  }
  if (names.size() != n) throw StructuralError("group label count does not match table");
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) throw StructuralError("group table is not square");
    if (table[0][g] != g || table[g][0] != g) throw StructuralError("element 0 is not the identity");
  }
  std::vector<std::size_t> dual(n, n);
  std::vector<int> fusion(n * n * n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t k = table[g][h];
      if (k >= n) throw StructuralError("group table entry out of range");
      fusion[(g * n + h) * n + k] = 1;
      if (k == 0) dual[g] = h;
    }
    if (dual[g] == n) throw StructuralError("element " + std::to_string(g) + " has no inverse");
  }
  return BasedRing(std::move(names), std::move(dual), std::move(fusion));
}

BasedRing deligne_product(const BasedRing& a, const BasedRing& b, const std::string& separator) {
  const std::size_t ra = a.rank(), rb = b.rank(), r = ra * rb;
  std::vector<std::string> names;
  std::vector<std::size_t> dual;
  names.reserve(r);
  dual.reserve(r);
  for (std::size_t i = 0; i < ra; ++i) {
    for (std::size_t j = 0; j < rb; ++j) {
      names.push_back(a.name(i) + separator + b.name(j));
      dual.push_back(a.dual(i) * rb + b.dual(j));
    }
  }
  std::vector<int> fusion(r * r * r, 0);
  for (std::size_t i1 = 0; i1 < ra; ++i1) {
    for (std::size_t j1 = 0; j1 < ra; ++j1) {
      for (const auto& [k1, n1] : a.product(i1, j1)) {
        for (std::size_t i2 = 0; i2 < rb; ++i2) {
          for (std::size_t j2 = 0; j2 < rb; ++j2) {
            for (const auto& [k2, n2] : b.product(i2, j2)) {
              const std::size_t i = i1 * rb + i2, j = j1 * rb + j2, k = k1 * rb + k2;
              fusion[(i * r + j) * r + k] = n1 * n2;
            }
          }
        }
      }
    }
  }
  return BasedRing(std::move(names), std::move(dual), std::move(fusion));
}

std::vector<std::size_t> invertible_elements(const BasedRing& ring) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    const auto& p = ring.product(i, ring.dual(i));
    if (p.size() == 1 && p[0].first == 0 && p[0].second == 1) out.push_back(i);
  }
  return out;
}

}  // namespace fuscond
