#include "fuscond/modulardata.h"

#include <algorithm>

#include "fuscond/errors.h"

namespace fuscond {

ModularData::ModularData(std::vector<std::string> labels, std::vector<std::size_t> dual,
                         ScalarMatrix s, ScalarVector twists)
    : labels_(std::move(labels)), dual_(std::move(dual)), s_(std::move(s)), t_(std::move(twists)) {
  const std::size_t r = labels_.size();
  if (r == 0) throw StructuralError("modular data needs at least one label");
  if (dual_.size() != r) throw StructuralError("dual length does not match rank");
  if (t_.size() != r) throw StructuralError("twist count does not match rank");
  if (s_.size() != r) throw StructuralError("S-matrix row count does not match rank");
  for (const auto& row : s_) {
    if (row.size() != r) throw StructuralError("S-matrix is not square");
  }
  for (std::size_t d : dual_) {
    if (d >= r) throw StructuralError("dual index out of range");
  }
}

std::size_t ModularData::index_of(const std::string& name) const {
  auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) throw StructuralError("unknown label '" + name + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

DimVector ModularData::dims() const {
  DimVector d;
  d.source = DimSource::Supplied;
  d.values = s_[0];
  return d;
}

Scalar ModularData::global_dim() const {
  Scalar total(0);
  for (const auto& d : s_[0]) total += d * d.conj();
  return total;
}

const BasedRing& ModularData::fusion_ring() const {
  if (!fusion_) fusion_ = verlinde(*this);
  return *fusion_;
}

void ModularData::attach_fusion(BasedRing ring) {
  if (ring.rank() != rank()) throw StructuralError("attached fusion ring has the wrong rank");
  if (ring.duals() != dual_) throw StructuralError("attached fusion ring disagrees on duals");
  fusion_ = std::move(ring);
  attached_ = true;
}

namespace {

std::vector<std::vector<Complex>> to_complex_matrix(const ScalarMatrix& s) {
  std::vector<std::vector<Complex>> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[i].reserve(s[i].size());
    for (const auto& v : s[i]) out[i].push_back(v.to_complex());
  }
  return out;
}

// Smallest M <= cap with z^M = 1 within tolerance, or 0.
unsigned float_root_order(const Complex& z, double tol) {
  if (to_double(boost::multiprecision::abs(abs(z) - 1)) > tol) return 0;
  Real turns = boost::multiprecision::atan2(z.imag(), z.real()) / (2 * pi());
  for (unsigned m = 1; m <= 10000; ++m) {
    Real x = turns * m;
    Real frac = boost::multiprecision::abs(x - boost::multiprecision::round(x));
    if (to_double(frac) < tol) return m;
  }
  return 0;
}

}  // namespace

ValidationReport validate(const ModularData& md, double tol) {
  ValidationReport report;
  const std::size_t r = md.rank();
  const auto s = to_complex_matrix(md.s_matrix());

  double worst = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      double d = to_double(abs(s[i][j] - s[j][i]));
      worst = std::max(worst, d);
      if (d > tol) report.fail("s-symmetric", {i, j}, "S[i][j] != S[j][i]", d);
    }
  }
  if (report.violations.empty()) report.pass("s-symmetric", {}, worst);

  std::size_t before = report.violations.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (s[0][i].real() <= 0 || to_double(boost::multiprecision::abs(s[0][i].imag())) > tol) {
      report.fail("positive-dims", {0, i}, "S[0][i] = " + md.s(0, i).to_string());
    }
  }
  if (to_double(abs(s[0][0] - Complex(1))) > tol) report.fail("unit-dim", {0, 0}, "S[0][0] != 1");
  if (report.violations.size() == before) report.pass("positive-dims");

  before = report.violations.size();
  worst = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      double d = to_double(abs(s[i][md.dual(j)] - conj(s[i][j])));
      worst = std::max(worst, d);
      if (d > tol) report.fail("s-dual-conjugate", {i, j}, "S[i][j*] != conj S[i][j]", d);
    }
  }
  if (report.violations.size() == before) report.pass("s-dual-conjugate", {}, worst);

  before = report.violations.size();
  worst = 0;
  Real dim = 0;
  for (std::size_t i = 0; i < r; ++i) dim += norm(s[0][i]);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Complex acc;
      for (std::size_t k = 0; k < r; ++k) acc += s[i][k] * conj(s[j][k]);
      if (i == j) acc -= Complex(dim);
      double d = to_double(abs(acc)) / to_double(dim);
      worst = std::max(worst, d);
      if (d > tol) report.fail("s-unitary", {i, j}, "(S S^dagger)[i][j] != dim delta", d);
    }
  }
  if (report.violations.size() == before) report.pass("s-unitary", {}, worst);

  before = report.violations.size();
  for (std::size_t i = 0; i < r; ++i) {
    const Scalar& t = md.twist(i);
    unsigned order = 0;
    if (t.is_exact()) {
      order = t.exact().root_of_unity_order();
    } else {
      order = float_root_order(t.to_complex(), tol);
    }
    if (order == 0) report.fail("twist-root-of-unity", {i}, "theta = " + t.to_string());
  }
  if (!md.twist(0).equals(Scalar(1), tol)) report.fail("twist-unit", {0}, "theta_0 != 1");
  if (report.violations.size() == before) report.pass("twist-root-of-unity");

  if (md.has_attached_fusion() && report.ok()) {
    try {
      BasedRing v = verlinde(md);
      const BasedRing& f = md.fusion_ring();
      std::size_t mismatches = 0;
      for (std::size_t i = 0; i < r && mismatches < 20; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          for (std::size_t k = 0; k < r; ++k) {
            if (v.N(i, j, k) != f.N(i, j, k)) {
              ++mismatches;
              report.fail("verlinde-agrees", {i, j, k},
                          "Verlinde " + std::to_string(v.N(i, j, k)) + " vs attached " +
                              std::to_string(f.N(i, j, k)));
            }
          }
        }
      }
      if (mismatches == 0) report.pass("verlinde-agrees");
    } catch (const InconsistentData& e) {
      report.fail("verlinde-agrees", {}, e.what());
    }
  }
  return report;
}

BasedRing verlinde(const ModularData& md) {
  const std::size_t r = md.rank();
  const auto s = to_complex_matrix(md.s_matrix());
  Real dim = 0;
  for (std::size_t i = 0; i < r; ++i) dim += norm(s[0][i]);
  const double round_tol = settings().round_tol;

  // w[j][k][q] = S[j][q] conj(S[k][q]) / (S[0][q] dim)
  std::vector<Complex> w(r * r * r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t q = 0; q < r; ++q) {
        w[(j * r + k) * r + q] = s[j][q] * conj(s[k][q]) / (s[0][q] * Complex(dim));
      }
    }
  }
  std::vector<int> fusion(r * r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        Complex acc;
        const Complex* row = &w[(j * r + k) * r];
        for (std::size_t q = 0; q < r; ++q) acc += s[i][q] * row[q];
        auto n = round_to_integer(acc.real(), round_tol);
        if (!n || to_double(boost::multiprecision::abs(acc.imag())) > round_tol || *n < 0) {
          throw InconsistentData("Verlinde coefficient N[" + md.labels()[i] + "][" +
                                 md.labels()[j] + "][" + md.labels()[k] +
                                 "] = " + to_string(acc, 12) + " is not a nonnegative integer");
        }
        fusion[(i * r + j) * r + k] = static_cast<int>(*n);
      }
    }
  }
  return BasedRing(md.labels(), md.duals(), std::move(fusion));
}

ScalarMatrix characters(const ModularData& md) {
  const std::size_t r = md.rank();
  ScalarMatrix chi(r, ScalarVector(r));
  for (std::size_t x = 0; x < r; ++x) {
    Scalar inv = md.s(0, x).inverse();
    for (std::size_t y = 0; y < r; ++y) chi[x][y] = md.s(x, y) * inv;
  }
  return chi;
}

ScalarVector central_idempotent(const ModularData& md, std::size_t x) {
  const std::size_t r = md.rank();
  Scalar coef = md.s(0, x) / md.global_dim();
  ScalarVector e(r);
  for (std::size_t z = 0; z < r; ++z) e[z] = coef * md.s(x, md.dual(z));
  return e;
}

ScalarVector multiply(const BasedRing& ring, const ScalarVector& a, const ScalarVector& b) {
  const std::size_t r = ring.rank();
  ScalarVector out(r, Scalar(0));
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i].is_zero(0)) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (b[j].is_zero(0)) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& [k, n] : ring.product(i, j)) out[k] += ab * Scalar(n);
    }
  }
  return out;
}

Element multiply(const BasedRing& ring, const Element& a, const Element& b) {
  const std::size_t r = ring.rank();
  Element out(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (norm(a[i]) == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (norm(b[j]) == 0) continue;
      Complex ab = a[i] * b[j];
      for (const auto& [k, n] : ring.product(i, j)) out[k] += ab * Real(n);
    }
  }
  return out;
}

IdempotentCheck check_central_idempotents(const ModularData& md) {
  const std::size_t r = md.rank();
  const BasedRing& ring = md.fusion_ring();
  std::vector<Element> e(r);
  for (std::size_t x = 0; x < r; ++x) {
    for (const auto& c : central_idempotent(md, x)) e[x].push_back(c.to_complex());
  }
  IdempotentCheck out;
  Element total(r);
  for (std::size_t x = 0; x < r; ++x) {
    total = total + e[x];
    for (std::size_t y = 0; y < r; ++y) {
      Element p = multiply(ring, e[x], e[y]);
      if (x == y) p = p - e[x];
      out.orthogonality = std::max(out.orthogonality, to_double(max_abs(p)));
    }
  }
  total[0] -= Complex(1);
  out.completeness = to_double(max_abs(total));
  return out;
}

ScalarMatrix balancing_s_matrix(const BasedRing& ring, const DimVector& dims,
                                const ScalarVector& twists) {
  const std::size_t r = ring.rank();
  if (dims.size() != r || twists.size() != r) {
    throw StructuralError("balancing needs one dimension and one twist per label");
  }
  // Twists lie on the unit circle, so their inverses are conjugates.
  ScalarVector inv(r), weighted(r);
  for (std::size_t i = 0; i < r; ++i) {
    inv[i] = twists[i].conj();
    weighted[i] = twists[i] * dims[i];
  }
  ScalarMatrix s(r, ScalarVector(r));
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t y = x; y < r; ++y) {
      Scalar acc(0);
      for (const auto& [z, n] : ring.product(ring.dual(x), y)) acc += Scalar(n) * weighted[z];
      s[x][y] = inv[x] * inv[y] * acc;
      s[y][x] = s[x][y];
    }
  }
  return s;
}

ModularData modular_data_from_balancing(const BasedRing& ring, const DimVector& dims,
                                        const ScalarVector& twists) {
  ModularData md(ring.names(), ring.duals(), balancing_s_matrix(ring, dims, twists), twists);
  md.attach_fusion(ring);
  return md;
}

ModularData deligne_product(const ModularData& a, const ModularData& b,
                            const std::string& separator) {
  const std::size_t ra = a.rank(), rb = b.rank(), r = ra * rb;
  std::vector<std::string> labels;
  std::vector<std::size_t> dual;
  ScalarVector t;
  for (std::size_t i = 0; i < ra; ++i) {
    for (std::size_t j = 0; j < rb; ++j) {
      labels.push_back(a.labels()[i] + separator + b.labels()[j]);
      dual.push_back(a.dual(i) * rb + b.dual(j));
      t.push_back(a.twist(i) * b.twist(j));
    }
  }
  ScalarMatrix s(r, ScalarVector(r));
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t y = x; y < r; ++y) {
      s[x][y] = a.s(x / rb, y / rb) * b.s(x % rb, y % rb);
      s[y][x] = s[x][y];
    }
  }
  ModularData out(std::move(labels), std::move(dual), std::move(s), std::move(t));
  out.attach_fusion(deligne_product(a.fusion_ring(), b.fusion_ring(), separator));
  return out;
}

ModularData reverse(const ModularData& md) {
  ScalarMatrix s = md.s_matrix();
  for (auto& row : s) {
    for (auto& v : row) v = v.conj();
  }
  ScalarVector t = md.twists();
  for (auto& v : t) v = v.conj();
  ModularData out(md.labels(), md.duals(), std::move(s), std::move(t));
  if (md.has_attached_fusion()) out.attach_fusion(md.fusion_ring());
  return out;
}

}  // namespace fuscond
