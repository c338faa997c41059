#include "group_catalog.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

template <typename T, typename Mul>
Table close(const T& identity, const std::vector<T>& gens, Mul mul) {
  std::vector<T> elems{identity};
  std::map<T, std::size_t> index{{identity, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      T h = mul(elems[i], g);
      if (!index.count(h)) {
        index[h] = elems.size();
        elems.push_back(h);
      }
    }
  }
  Table t(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) t[i][j] = index.at(mul(elems[i], elems[j]));
  }
  return t;
}

std::vector<int> cycle_perm(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  }
  return p;
}

std::vector<int> affine(int n, int mult, int add) {
  std::vector<int> p(n);
  for (int x = 0; x < n; ++x) p[x] = (mult * x + add) % n;
  return p;
}

std::vector<long long> degrees(std::initializer_list<std::pair<long long, int>> spec) {
  std::vector<long long> out;
  for (auto [d, count] : spec) out.insert(out.end(), count, d);
  std::sort(out.begin(), out.end());
  return out;
}

Table cyclic(int n) {
  Table t(n, std::vector<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return t;
}

Table dihedral(int m) {
  if (m == 2) return from_permutations({cycle_perm(4, {{0, 1}}), cycle_perm(4, {{2, 3}})});
  return from_permutations({affine(m, 1, 1), [&] {
                              std::vector<int> p(m);
                              for (int x = 0; x < m; ++x) p[x] = (m - x) % m;
                              return p;
                            }()});
}

Table direct_product(const Table& a, const Table& b) {
  const std::size_t na = a.size(), nb = b.size();
  Table t(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t i = 0; i < na * nb; ++i) {
    for (std::size_t j = 0; j < na * nb; ++j) t[i][j] = a[i / nb][j / nb] * nb + b[i % nb][j % nb];
  }
  return t;
}

// Generalized quaternion group of order 16 inside SL(2, F_7).
Table q16() {
  using M = std::vector<int>;
  const int p = 7;
  auto mul = [&](const M& x, const M& y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
             (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
  };
  const M id{1, 0, 0, 1};
  auto power = [&](M x, int k) {
    M r = id;
    while (k-- > 0) r = mul(r, x);
    return r;
  };
  auto order = [&](const M& x) {
    M y = x;
    int k = 1;
    while (y != id) {
      y = mul(y, x);
      ++k;
    }
    return k;
  };
  std::vector<M> sl;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p == 1) sl.push_back({a, b, c, d});
  for (const auto& a : sl) {
    if (order(a) != 8) continue;
    const M a4 = power(a, 4), ainv = power(a, 7);
    for (const auto& b : sl) {
      if (mul(b, b) != a4) continue;
      if (mul(mul(b, a), power(b, 3)) == ainv) return from_matrices_mod_p({a, b}, p);
    }
  }
  throw std::logic_error("no Q16 found in SL(2,7)");
}

}  // namespace

Table from_permutations(const std::vector<std::vector<int>>& gens) {
  const std::size_t n = gens.front().size();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return close(id, gens, [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
    return r;
  });
}

Table from_matrices_mod_p(const std::vector<std::vector<int>>& gens, int p) {
  std::vector<std::vector<int>> reduced;
  for (auto g : gens) {
    for (auto& v : g) v = ((v % p) + p) % p;
    reduced.push_back(g);
  }
  return close(std::vector<int>{1, 0, 0, 1}, reduced, [p](const std::vector<int>& x, const std::vector<int>& y) {
    return std::vector<int>{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
                            (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
  });
}

const std::vector<CatalogGroup>& catalog() {
  static const std::vector<CatalogGroup> groups = [] {
    std::vector<CatalogGroup> g;
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 12, 24}) g.push_back({"Z" + std::to_string(n), cyclic(n), degrees({{1, n}})});
    g.push_back({"Z2xZ2", dihedral(2), degrees({{1, 4}})});
    g.push_back({"S3", dihedral(3), degrees({{1, 2}, {2, 1}})});
    g.push_back({"D8", dihedral(4), degrees({{1, 4}, {2, 1}})});
    g.push_back({"D10", dihedral(5), degrees({{1, 2}, {2, 2}})});
    g.push_back({"D12", dihedral(6), degrees({{1, 4}, {2, 2}})});
    g.push_back({"D14", dihedral(7), degrees({{1, 2}, {2, 3}})});
    g.push_back({"D16", dihedral(8), degrees({{1, 4}, {2, 3}})});
    g.push_back({"D18", dihedral(9), degrees({{1, 2}, {2, 4}})});
    g.push_back({"D24", dihedral(12), degrees({{1, 4}, {2, 5}})});
    g.push_back({"Q8", from_matrices_mod_p({{0, -1, 1, 0}, {1, 1, 1, -1}}, 3), degrees({{1, 4}, {2, 1}})});
    g.push_back({"Q16", q16(), degrees({{1, 4}, {2, 3}})});
    g.push_back({"A4", from_permutations({cycle_perm(4, {{0, 1, 2}}), cycle_perm(4, {{0, 1}, {2, 3}})}),
                 degrees({{1, 3}, {3, 1}})});
    g.push_back({"S4", from_permutations({cycle_perm(4, {{0, 1, 2, 3}}), cycle_perm(4, {{0, 1}})}),
                 degrees({{1, 2}, {2, 1}, {3, 2}})});
    g.push_back({"SL(2,3)", from_matrices_mod_p({{1, 1, 0, 1}, {0, -1, 1, 0}}, 3),
                 degrees({{1, 3}, {2, 3}, {3, 1}})});
    g.push_back({"Dic12", from_permutations({cycle_perm(7, {{0, 1, 2}}), cycle_perm(7, {{3, 4, 5, 6}, {1, 2}})}),
                 degrees({{1, 4}, {2, 2}})});
    g.push_back({"Z3:Z8",
                 from_permutations({cycle_perm(11, {{0, 1, 2}}), cycle_perm(11, {{3, 4, 5, 6, 7, 8, 9, 10}, {1, 2}})}),
                 degrees({{1, 8}, {2, 4}})});
    g.push_back({"F20", from_permutations({affine(5, 1, 1), affine(5, 2, 0)}), degrees({{1, 4}, {4, 1}})});
    g.push_back({"Z7:Z3", from_permutations({affine(7, 1, 1), affine(7, 2, 0)}), degrees({{1, 3}, {3, 2}})});
    g.push_back({"Z3xS3", direct_product(cyclic(3), dihedral(3)), degrees({{1, 6}, {2, 3}})});
    g.push_back({"Z2xA4", direct_product(cyclic(2), from_permutations({cycle_perm(4, {{0, 1, 2}}),
                                                                      cycle_perm(4, {{0, 1}, {2, 3}})})),
                 degrees({{1, 6}, {3, 2}})});
    g.push_back({"Z4xS3", direct_product(cyclic(4), dihedral(3)), degrees({{1, 8}, {2, 4}})});
    return g;
  }();
  return groups;
}

}  // namespace oracle
