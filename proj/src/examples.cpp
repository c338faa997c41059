#include "fuscond/examples.h"

#include <algorithm>

#include "fuscond/errors.h"

namespace fuscond {

namespace {

// Accumulates fusion rules on named labels and produces a BasedRing.
class RingBuilder {
 public:
  explicit RingBuilder(std::vector<std::string> names)
      : names_(std::move(names)), dual_(names_.size()), fusion_(names_.size() * names_.size() * names_.size()) {
    for (std::size_t i = 0; i < dual_.size(); ++i) dual_[i] = i;
  }
  std::size_t rank() const { return names_.size(); }
  void set_dual(std::size_t i, std::size_t j) {
    dual_[i] = j;
    dual_[j] = i;
  }
  void add(std::size_t i, std::size_t j, std::size_t k, int n = 1) {
    fusion_[(i * rank() + j) * rank() + k] += n;
  }
  BasedRing finish() const { return BasedRing(names_, dual_, fusion_); }

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> dual_;
  std::vector<int> fusion_;
};

DimVector supplied(ScalarVector v) { return DimVector{std::move(v), DimSource::Supplied}; }

std::string power_name(int k, const std::string& base) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + std::to_string(k);
}

std::vector<std::string> dihedral_names(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(i == 0 ? "1" : power_name(i, "t"));
  for (int i = 0; i < k; ++i) names.push_back(power_name(i, "t") + "s");
  return names;
}

// Index of t^a s^b in the dihedral group of order 2k.
std::size_t dihedral_index(int k, int a, int b) {
  return static_cast<std::size_t>(((a % k) + k) % k + b * k);
}

std::size_t dihedral_mul(int k, std::size_t x, std::size_t y) {
  const int a1 = static_cast<int>(x) % k, b1 = static_cast<int>(x) / k;
  const int a2 = static_cast<int>(y) % k, b2 = static_cast<int>(y) / k;
  return dihedral_index(k, a1 + (b1 ? -a2 : a2), b1 ^ b2);
}

void add_dihedral(RingBuilder& rb, int k) {
  const std::size_t order = 2 * static_cast<std::size_t>(k);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) rb.add(x, y, dihedral_mul(k, x, y));
    if (x < static_cast<std::size_t>(k)) rb.set_dual(x, dihedral_index(k, -static_cast<int>(x), 0));
  }
}

// Module ring of the A_{2n} family: D_{2m} with m = 2n+1, plus X and Y.
BasedRing a2n_module_ring(int n) {
  const int m = 2 * n + 1;
  auto names = dihedral_names(m);
  names.push_back("X");
  names.push_back("Y");
  RingBuilder rb(names);
  add_dihedral(rb, m);
  const std::size_t X = 2 * m, Y = 2 * m + 1;
  for (std::size_t g = 0; g < X; ++g) {
    const bool refl = g >= static_cast<std::size_t>(m);
    rb.add(g, X, refl ? Y : X);
    rb.add(X, g, refl ? Y : X);
    rb.add(g, Y, refl ? X : Y);
    rb.add(Y, g, refl ? X : Y);
  }
  for (int h = 0; h < m; ++h) {
    rb.add(X, X, h);
    rb.add(Y, Y, h);
    rb.add(X, Y, m + h);
    rb.add(Y, X, m + h);
  }
  return rb.finish();
}

// Module ring of the A_{2n+1} family: D_{2m} with m = 2n+2, plus X1, X2, Y1, Y2.
BasedRing a2nplus1_module_ring(int n) {
  const int m = 2 * n + 2;
  auto names = dihedral_names(m);
  for (const char* s : {"X1", "X2", "Y1", "Y2"}) names.push_back(s);
  RingBuilder rb(names);
  add_dihedral(rb, m);
  const std::size_t base = 2 * m;
  auto X = [&](int i) { return base + static_cast<std::size_t>(i % 2); };
  auto Y = [&](int i) { return base + 2 + static_cast<std::size_t>(i % 2); };
  for (std::size_t g = 0; g < base; ++g) {
    const int k = static_cast<int>(g) % m;
    const bool refl = g >= static_cast<std::size_t>(m);
    for (int i = 0; i < 2; ++i) {
      const std::size_t gx = refl ? Y(i + k) : X(i + k);
      const std::size_t gy = refl ? X(i + k) : Y(i + k);
      rb.add(g, X(i), gx);
      rb.add(X(i), g, gx);
      rb.add(g, Y(i), gy);
      rb.add(Y(i), g, gy);
    }
  }
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int r = 0; r <= n; ++r) {
        const std::size_t rot = dihedral_index(m, 2 * r + (a + b) % 2, 0);
        const std::size_t refl = dihedral_index(m, 2 * r + (a + b) % 2, 1);
        rb.add(X(a), X(b), rot);
        rb.add(Y(a), Y(b), rot);
        rb.add(X(a), Y(b), refl);
        rb.add(Y(b), X(a), refl);
      }
    }
  }
  return rb.finish();
}

ScalarVector group_plus_sqrt(std::size_t group, std::size_t extra, long long square) {
  ScalarVector d(group, Scalar(1));
  for (std::size_t i = 0; i < extra; ++i) d.push_back(Scalar(Cyclotomic::sqrt_integer(square)));
  return d;
}

int twisted_weight(int base, bool complement, int lattice_rank) {
  // Smallest positive d with d = -rank (mod 8) for the complement lattice.
  if (!complement) return base;
  int d = ((-lattice_rank) % 8 + 8) % 8;
  return d == 0 ? 8 : d;
}

Element sum_terms(std::size_t s, std::initializer_list<std::size_t> idx) {
  Element e(s);
  for (auto i : idx) e[i] += Complex(1);
  return e;
}

CondensationBundle make_a2n(int n) {
  const int m = 2 * n + 1;
  ModularData L = a2n_side(n, false);
  ModularData K = a2n_side(n, true);
  const std::size_t rl = L.rank(), rk = K.rank();
  Ambient amb = Ambient::from_factors({L, K}, ":");
  std::vector<int> mult(rl * rk, 0);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) mult[a * rk + b] = 1;
  }
  for (int r = 1; r <= n; ++r) mult[(r + 1) * rk + (r + 1)] = 2;

  BasedRing mod = a2n_module_ring(n);
  const std::size_t s = mod.rank();
  const std::size_t X = 2 * m, Y = 2 * m + 1;
  auto side_image = [&](std::size_t i, bool complement) {
    if (i < 2) return sum_terms(s, {0});
    if (i < static_cast<std::size_t>(n) + 2) {
      const int r = static_cast<int>(i) - 1;
      return sum_terms(s, {dihedral_index(m, r, 0), dihedral_index(m, -r, 0)});
    }
    return sum_terms(s, {complement ? X : Y});
  };
  std::vector<std::vector<int>> induction(rl * rk, std::vector<int>(s, 0));
  for (std::size_t a = 0; a < rl; ++a) {
    for (std::size_t b = 0; b < rk; ++b) {
      Element img = multiply(mod, side_image(a, false), side_image(b, true));
      for (std::size_t y = 0; y < s; ++y) {
        induction[a * rk + b][y] = static_cast<int>(*round_to_integer(img[y].real(), 1e-9));
      }
    }
  }
  return CondensationBundle{"a2n-" + std::to_string(n), std::move(amb), std::move(mult), mod,
                            supplied(group_plus_sqrt(2 * m, 2, m)), std::move(induction), Subring({0})};
}

// Labels, duals, dims and twists of one side of the A_{2n+1} family.
struct SideData {
  std::vector<std::string> labels;
  std::vector<std::size_t> dual;
  ScalarVector dims, twists;
};

SideData a2nplus1_side(int n, bool complement) {
  const std::string p = complement ? "K" : "L";
  const int m = 2 * n + 2;
  SideData sd;
  for (const char* s : {"+", "-", "N+", "N-"}) sd.labels.push_back(p + s);
  for (int r = 1; r <= n; ++r) sd.labels.push_back(p + std::to_string(r));
  for (const char* s : {"T1+", "T1-", "T2+", "T2-"}) sd.labels.push_back(p + s);
  for (std::size_t i = 0; i < sd.labels.size(); ++i) sd.dual.push_back(i);
  auto adjust = [&](Cyclotomic c) { return complement ? c.conj() : c; };
  sd.twists = {Scalar(1), Scalar(1), Scalar(adjust(Cyclotomic::zeta(4, n + 1))),
               Scalar(adjust(Cyclotomic::zeta(4, n + 1)))};
  sd.dims = {Scalar(1), Scalar(1), Scalar(1), Scalar(1)};
  for (int r = 1; r <= n; ++r) {
    sd.twists.push_back(Scalar(adjust(Cyclotomic::zeta(2 * m, static_cast<long long>(r) * (m - r)))));
    sd.dims.push_back(Scalar(2));
  }
  const int w = twisted_weight(2 * n + 1, complement, 2 * n + 1);
  const Cyclotomic t = Cyclotomic::zeta(16, w);
  for (int i = 0; i < 2; ++i) {
    sd.twists.push_back(Scalar(t));
    sd.twists.push_back(Scalar(-t));
    sd.dims.push_back(Scalar(Cyclotomic::sqrt_integer(n + 1)));
    sd.dims.push_back(Scalar(Cyclotomic::sqrt_integer(n + 1)));
  }
  return sd;
}

CondensationBundle make_a2nplus1(int n) {
  SideData L = a2nplus1_side(n, false), K = a2nplus1_side(n, true);
  const std::size_t rl = L.labels.size(), rk = K.labels.size();
  std::vector<std::string> labels;
  std::vector<std::size_t> dual;
  ScalarVector dims, twists;
  for (std::size_t a = 0; a < rl; ++a) {
    for (std::size_t b = 0; b < rk; ++b) {
      labels.push_back(L.labels[a] + ":" + K.labels[b]);
      dual.push_back(L.dual[a] * rk + K.dual[b]);
      dims.push_back(L.dims[a] * K.dims[b]);
      twists.push_back(L.twists[a] * K.twists[b]);
    }
  }
  Ambient amb = Ambient::from_dims(std::move(labels), std::move(dual), supplied(std::move(dims)), std::move(twists));
  std::vector<int> mult(rl * rk, 0);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      if ((a < 2) == (b < 2)) mult[a * rk + b] = 1;
    }
  }
  for (int r = 1; r <= n; ++r) mult[(r + 3) * rk + (r + 3)] = 2;
  const int m = 2 * n + 2;
  return CondensationBundle{"a2nplus1-" + std::to_string(n), std::move(amb), std::move(mult),
                            a2nplus1_module_ring(n), supplied(group_plus_sqrt(2 * m, 4, n + 1)), std::nullopt,
                            Subring({0})};
}

CondensationBundle make_vlplus_orbifold(int n) {
  if (n != 1) throw CapabilityError("vlplus-orbifold is available for n = 1 only");
  ModularData L = a2n_side(1, false);
  BasedRing ty = tambara_yamagami(3);
  // L+, L- -> 1; L1 -> g + g^2; LT+, LT- -> T.
  std::vector<std::vector<int>> induction = {
      {1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}};
  return CondensationBundle{"vlplus-orbifold-1", Ambient::from_modular(std::move(L)), {1, 1, 0, 0, 0}, ty,
                            supplied(group_plus_sqrt(3, 1, 3)), std::move(induction), Subring({0, 1, 2})};
}

CondensationBundle make_toric_code() {
  RingBuilder rb({"1", "M"});
  rb.add(0, 0, 0);
  rb.add(0, 1, 1);
  rb.add(1, 0, 1);
  rb.add(1, 1, 0);
  std::vector<std::vector<int>> induction = {{1, 0}, {1, 0}, {0, 1}, {0, 1}};
  return CondensationBundle{"toric-code", Ambient::from_modular(toric_code()), {1, 1, 0, 0}, rb.finish(),
                            supplied({Scalar(1), Scalar(1)}), std::move(induction), Subring({0})};
}

CondensationBundle make_coset(const ModularData& u, const std::string& name) {
  const BasedRing& ring = u.fusion_ring();
  const std::size_t r = u.rank();
  Ambient amb = Ambient::from_factors({u, reverse(u)}, ":");
  std::vector<int> mult(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) mult[i * r + u.dual(i)] = 1;
  std::vector<std::vector<int>> induction(r * r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (const auto& [k, c] : ring.product(i, j)) induction[i * r + j][k] = c;
    }
  }
  return CondensationBundle{name, std::move(amb), std::move(mult), ring, u.dims(), std::move(induction),
                            Subring({0})};
}

}  // namespace

BasedRing dihedral_ring(int k) {
  if (k < 1) throw CapabilityError("dihedral order must be positive");
  RingBuilder rb(dihedral_names(k));
  add_dihedral(rb, k);
  return rb.finish();
}

BasedRing tambara_yamagami(int k) {
  if (k < 1) throw CapabilityError("Tambara-Yamagami needs a nontrivial group order");
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(i == 0 ? "1" : power_name(i, "g"));
  names.push_back("T");
  RingBuilder rb(names);
  const std::size_t T = static_cast<std::size_t>(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) rb.add(a, b, (a + b) % k);
    rb.set_dual(a, (k - a) % k);
    rb.add(a, T, T);
    rb.add(T, a, T);
    rb.add(T, T, a);
  }
  return rb.finish();
}

ModularData toric_code() {
  ScalarMatrix s = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  return ModularData({"1", "e", "m", "f"}, {0, 1, 2, 3}, std::move(s), {Scalar(1), Scalar(1), Scalar(1), Scalar(-1)});
}

ModularData ising() {
  const Scalar r2(Cyclotomic::sqrt_integer(2));
  ScalarMatrix s = {{1, 1, r2}, {1, 1, -r2}, {r2, -r2, 0}};
  return ModularData({"1", "psi", "sigma"}, {0, 1, 2}, std::move(s),
                     {Scalar(1), Scalar(-1), Scalar(Cyclotomic::zeta(16, 1))});
}

ModularData a2n_side(int n, bool complement) {
  if (n < 1) throw CapabilityError("a2n needs n >= 1");
  const int m = 2 * n + 1;
  const std::string p = complement ? "K" : "L";
  std::vector<std::string> names = {p + "+", p + "-"};
  for (int r = 1; r <= n; ++r) names.push_back(p + std::to_string(r));
  names.push_back(p + "T+");
  names.push_back(p + "T-");
  RingBuilder rb(names);
  const std::size_t plus = 0, minus = 1, tp = n + 2, tm = n + 3;
  auto lam = [&](int r) -> std::size_t {
    r = ((r % m) + m) % m;
    return static_cast<std::size_t>(std::min(r, m - r) + 1);
  };
  const std::size_t rank = names.size();
  for (std::size_t x = 0; x < rank; ++x) {
    rb.add(plus, x, x);
    if (x != plus) rb.add(x, plus, x);
  }
  rb.add(minus, minus, plus);
  for (int r = 1; r <= n; ++r) {
    rb.add(minus, lam(r), lam(r));
    rb.add(lam(r), minus, lam(r));
  }
  rb.add(minus, tp, tm);
  rb.add(minus, tm, tp);
  rb.add(tp, minus, tm);
  rb.add(tm, minus, tp);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) {
        rb.add(lam(i), lam(i), plus);
        rb.add(lam(i), lam(i), minus);
        rb.add(lam(i), lam(i), lam(2 * i));
      } else {
        rb.add(lam(i), lam(j), lam(i + j));
        rb.add(lam(i), lam(j), lam(i - j));
      }
    }
    for (std::size_t t : {tp, tm}) {
      rb.add(lam(i), t, tp);
      rb.add(lam(i), t, tm);
      rb.add(t, lam(i), tp);
      rb.add(t, lam(i), tm);
    }
  }
  // T+ T+ = T- T- = P+ + sum; T+ T- = T- T+ = P- + sum.
  for (std::size_t a : {tp, tm}) {
    for (std::size_t b : {tp, tm}) {
      rb.add(a, b, a == b ? plus : minus);
      for (int r = 1; r <= n; ++r) rb.add(a, b, lam(r));
    }
  }
  BasedRing ring = rb.finish();

  auto adjust = [&](Cyclotomic c) { return complement ? c.conj() : c; };
  ScalarVector dims = {Scalar(1), Scalar(1)};
  ScalarVector twists = {Scalar(1), Scalar(1)};
  for (int r = 1; r <= n; ++r) {
    dims.push_back(Scalar(2));
    twists.push_back(Scalar(adjust(Cyclotomic::zeta(2 * m, static_cast<long long>(r) * (m - r)))));
  }
  const Cyclotomic t = complement ? Cyclotomic::zeta(16, twisted_weight(0, true, 2 * n)) : Cyclotomic::zeta(8, n);
  for (int i = 0; i < 2; ++i) dims.push_back(Scalar(Cyclotomic::sqrt_integer(m)));
  twists.push_back(Scalar(t));
  twists.push_back(Scalar(-t));
  return modular_data_from_balancing(ring, supplied(std::move(dims)), twists);
}

CondensationBundle build(const ExampleSpec& spec) {
  const int n = spec.n;
  switch (spec.family) {
    case Family::A2n:
      if (n < 1 || n > 6) throw CapabilityError("a2n supports n = 1..6");
      return make_a2n(n);
    case Family::A2nPlus1:
      if (n < 1 || n > 6) throw CapabilityError("a2nplus1 supports n = 1..6");
      return make_a2nplus1(n);
    case Family::VLplusOrbifold:
      return make_vlplus_orbifold(n);
    case Family::ToricCode:
      return make_toric_code();
    case Family::IsingSquare:
      return make_coset(ising(), "ising-square");
    case Family::CosetDiagonal:
      if (!spec.md) throw CapabilityError("coset needs modular data");
      return make_coset(*spec.md, "coset");
  }
  throw CapabilityError("unknown example family");
}

namespace {
const std::vector<std::pair<std::string, Family>>& name_table() {
  static const std::vector<std::pair<std::string, Family>> t = {
      {"a2n", Family::A2n},
      {"a2nplus1", Family::A2nPlus1},
      {"vlplus-orbifold", Family::VLplusOrbifold},
      {"toric-code", Family::ToricCode},
      {"ising-square", Family::IsingSquare},
      {"coset", Family::CosetDiagonal}};
  return t;
}
}  // namespace

std::optional<Family> family_from_name(const std::string& name) {
  for (const auto& [n, f] : name_table()) {
    if (n == name) return f;
  }
  return std::nullopt;
}

std::string family_name(Family f) {
  for (const auto& [n, g] : name_table()) {
    if (g == f) return n;
  }
  return "unknown";
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& p : name_table()) out.push_back(p.first);
  return out;
}

}  // namespace fuscond
