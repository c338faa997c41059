#include "fuscond/semisimple.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "fuscond/errors.h"

namespace fuscond {

AssocAlgebra::AssocAlgebra(std::size_t dim, std::vector<std::vector<Term>> products,
                           RationalVector unit)
    : dim_(dim), products_(std::move(products)), unit_(std::move(unit)) {
  if (products_.size() != dim_ * dim_) throw StructuralError("structure constants need dim^2 entries");
  if (unit_.size() != dim_) throw StructuralError("unit vector has the wrong length");
  real_products_.resize(products_.size());
  for (std::size_t p = 0; p < products_.size(); ++p) {
    for (const auto& [k, c] : products_[p]) {
      if (k >= dim_) throw StructuralError("structure constant index out of range");
      real_products_[p].emplace_back(k, to_real(c));
    }
  }
  trace_.assign(dim_, Rational(0));
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (const auto& [k, c] : product(j, i)) {
        if (k == i) trace_[j] += c;
      }
    }
  }
  form_.resize(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = 0; b < dim_; ++b) {
      Rational f = 0;
      for (const auto& [k, c] : product(a, b)) f += c * trace_[k];
      if (f != 0) form_[a].emplace_back(b, to_real(f));
    }
  }
}

AssocAlgebra AssocAlgebra::from_ring(const BasedRing& ring) {
  const std::size_t n = ring.rank();
  std::vector<std::vector<Term>> products(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : ring.product(i, j)) products[i * n + j].emplace_back(k, Rational(c));
    }
  }
  RationalVector unit(n, Rational(0));
  unit[0] = 1;
  return AssocAlgebra(n, std::move(products), std::move(unit));
}

Element AssocAlgebra::unit_element() const {
  Element e(dim_);
  for (std::size_t i = 0; i < dim_; ++i) e[i] = Complex(to_real(unit_[i]));
  return e;
}

Element AssocAlgebra::basis_element(std::size_t i) const {
  Element e(dim_);
  e.at(i) = Complex(1);
  return e;
}

RationalVector AssocAlgebra::multiply(const RationalVector& a, const RationalVector& b) const {
  RationalVector out(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      const Rational ab = a[i] * b[j];
      for (const auto& [k, c] : product(i, j)) out[k] += ab * c;
    }
  }
  return out;
}

Element AssocAlgebra::multiply(const Element& a, const Element& b) const {
  Element out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].real() == 0 && a[i].imag() == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].real() == 0 && b[j].imag() == 0) continue;
      const Complex ab = a[i] * b[j];
      for (const auto& [k, c] : real_products_[i * dim_ + j]) out[k] += ab * c;
    }
  }
  return out;
}

CMatrix AssocAlgebra::left_mult(const Element& a) const {
  CMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].real() == 0 && a[i].imag() == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : real_products_[i * dim_ + j]) m(k, j) += a[i] * c;
    }
  }
  return m;
}

Complex AssocAlgebra::regular_trace(const Element& a) const {
  Complex t;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (trace_[j] != 0) t += a[j] * to_real(trace_[j]);
  }
  return t;
}

Complex AssocAlgebra::trace_pairing(const Element& a, const Element& b) const {
  Complex t;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].real() == 0 && a[i].imag() == 0) continue;
    Complex row;
    for (const auto& [j, f] : form_[i]) row += b[j] * f;
    t += a[i] * row;
  }
  return t;
}

ValidationReport validate(const AssocAlgebra& alg) {
  ValidationReport report;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector bi(n, Rational(0));
    bi[i] = 1;
    if (alg.multiply(alg.unit(), bi) != bi || alg.multiply(bi, alg.unit()) != bi) {
      report.fail("unit", {i}, "unit does not act trivially");
    }
  }
  if (report.ok()) report.pass("unit");
  std::size_t before = report.violations.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        RationalVector lhs(n, Rational(0)), rhs(n, Rational(0));
        for (const auto& [m, a] : alg.product(i, j)) {
          for (const auto& [l, b] : alg.product(m, k)) lhs[l] += a * b;
        }
        for (const auto& [m, a] : alg.product(j, k)) {
          for (const auto& [l, b] : alg.product(i, m)) rhs[l] += a * b;
        }
        if (lhs != rhs) report.fail("associativity", {i, j, k}, "(ij)k != i(jk)");
      }
    }
  }
  if (report.violations.size() == before) report.pass("associativity");
  return report;
}

CenterBasis center(const AssocAlgebra& alg) {
  const std::size_t n = alg.dim();
  RowReducer reducer(n);
  // z central iff sum_j z_j (c_{j i}^k - c_{i j}^k) = 0 for all i, k.
  for (std::size_t i = 0; i < n && reducer.rank() < n; ++i) {
    std::vector<RationalVector> eq(n, RationalVector(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : alg.product(j, i)) eq[k][j] += c;
      for (const auto& [k, c] : alg.product(i, j)) eq[k][j] -= c;
    }
    for (auto& row : eq) {
      if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; })) {
        reducer.add_row(std::move(row));
      }
    }
  }
  return {reducer.nullspace(), reducer.free_columns()};
}

namespace {

constexpr int kMaxRetries = 8;

// Orders character vectors componentwise, treating near-equal entries as equal.
bool character_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const Real eps("1e-9");
  for (std::size_t i = 0; i < a.size(); ++i) {
    Real d = a[i].real() - b[i].real();
    if (boost::multiprecision::abs(d) > eps) return d < 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    Real d = a[i].imag() - b[i].imag();
    if (boost::multiprecision::abs(d) > eps) return d < 0;
  }
  return false;
}

// Idempotent coordinates (in the center basis) for each eigenvalue of the
// multiplication matrix m, or empty if the eigenvalues are not separated.
std::vector<std::vector<Complex>> split(const RationalMatrix& m, const RationalVector& unit_coords) {
  const std::size_t k = m.size();
  RationalVector p = characteristic_polynomial(m);
  if (gcd_degree(p, derivative(p)) > 0) return {};
  std::vector<Complex> coeffs;
  for (const auto& c : p) coeffs.emplace_back(to_real(c));
  std::vector<Complex> roots;
  try {
    roots = polynomial_roots(coeffs);
  } catch (const NumericalError&) {
    return {};
  }
  if (roots.size() != k) return {};
  const Real gap(settings().gap);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (abs(roots[a] - roots[b]) < gap) return {};
    }
  }
  std::vector<std::vector<Complex>> mc(k, std::vector<Complex>(k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) mc[r][c] = Complex(to_real(m[r][c]));
  }
  std::vector<Complex> u(k);
  for (std::size_t i = 0; i < k; ++i) u[i] = Complex(to_real(unit_coords[i]));

  std::vector<std::vector<Complex>> out;
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<Complex> v = u;
    for (std::size_t b = 0; b < k; ++b) {
      if (b == a) continue;
      const Complex denom = roots[a] - roots[b];
      std::vector<Complex> w(k);
      for (std::size_t r = 0; r < k; ++r) {
        Complex acc = -(roots[b] * v[r]);
        for (std::size_t c = 0; c < k; ++c) acc += mc[r][c] * v[c];
        w[r] = acc / denom;
      }
      v = std::move(w);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

BlockProfile central_idempotents(const AssocAlgebra& alg) {
  const std::size_t n = alg.dim();
  const CenterBasis cb = center(alg);
  const std::size_t k = cb.basis.size();
  RationalVector unit_coords(k);
  for (std::size_t b = 0; b < k; ++b) unit_coords[b] = alg.unit()[cb.free_columns[b]];

  BlockProfile profile;
  std::vector<std::vector<Complex>> coords;
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    const std::uint64_t seed = settings().seed + static_cast<std::uint64_t>(attempt);
    if (k == 1) {
      coords = {{Complex(to_real(unit_coords[0]))}};
      profile.seed = seed;
      break;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-7, 7);
    RationalVector z(n, Rational(0));
    for (std::size_t b = 0; b < k; ++b) {
      const int r = dist(rng);
      if (r == 0) continue;
      for (std::size_t i = 0; i < n; ++i) z[i] += cb.basis[b][i] * r;
    }
    RationalMatrix m(k, RationalVector(k));
    for (std::size_t b = 0; b < k; ++b) {
      RationalVector prod = alg.multiply(z, cb.basis[b]);
      for (std::size_t r = 0; r < k; ++r) m[r][b] = prod[cb.free_columns[r]];
    }
    coords = split(m, unit_coords);
    if (!coords.empty()) {
      profile.seed = seed;
      profile.retries = attempt;
      break;
    }
    if (attempt == kMaxRetries) {
      throw NumericalError("central element eigenvalues stay clustered after " +
                           std::to_string(kMaxRetries) + " retries");
    }
  }

  std::vector<std::pair<std::vector<Complex>, Block>> keyed;
  for (const auto& c : coords) {
    Block block;
    block.idempotent.assign(n, Complex());
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t i = 0; i < n; ++i) {
        if (cb.basis[b][i] != 0) block.idempotent[i] += c[b] * to_real(cb.basis[b][i]);
      }
    }
    const Complex tr = alg.regular_trace(block.idempotent);
    auto bd = round_to_integer(tr.real(), settings().round_tol);
    if (!bd || *bd <= 0) {
      throw InconsistentData("block dimension " + to_string(tr, 12) + " is not a positive integer");
    }
    const long long m = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(*bd))));
    if (m * m != *bd) {
      throw InconsistentData("block dimension " + std::to_string(*bd) +
                             " is not a square; the algebra is not split semisimple");
    }
    block.block_dim = *bd;
    block.m = m;
    std::vector<Complex> key = block_character(alg, block);
    keyed.emplace_back(std::move(key), std::move(block));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.m != b.second.m) return a.second.m < b.second.m;
    return character_less(a.first, b.first);
  });
  for (auto& kb : keyed) profile.blocks.push_back(std::move(kb.second));

  Element total(n);
  for (std::size_t a = 0; a < profile.blocks.size(); ++a) {
    const Element& ea = profile.blocks[a].idempotent;
    total = total + ea;
    for (std::size_t b = 0; b < profile.blocks.size(); ++b) {
      Element p = alg.multiply(ea, profile.blocks[b].idempotent);
      if (a == b) p = p - ea;
      profile.orthogonality = std::max(profile.orthogonality, to_double(max_abs(p)));
    }
    for (std::size_t i = 0; i < n; ++i) {
      Element bi = alg.basis_element(i);
      Element diff = alg.multiply(ea, bi) - alg.multiply(bi, ea);
      profile.centrality = std::max(profile.centrality, to_double(max_abs(diff)));
    }
  }
  profile.completeness = to_double(max_abs(total - alg.unit_element()));
  return profile;
}

Complex normalized_block_trace(const AssocAlgebra& alg, const Block& block, const Element& a) {
  return alg.trace_pairing(block.idempotent, a) / Real(block.m);
}

std::vector<Complex> block_character(const AssocAlgebra& alg, const Block& block) {
  std::vector<Complex> chi;
  chi.reserve(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    chi.push_back(normalized_block_trace(alg, block, alg.basis_element(i)));
  }
  return chi;
}

}  // namespace fuscond
