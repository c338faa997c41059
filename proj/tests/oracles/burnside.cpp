#include "burnside.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace oracle {

namespace {

std::vector<std::size_t> class_ids(const Table& t, std::size_t& count) {
  const std::size_t n = t.size();
  std::vector<std::size_t> inv(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (t[g][h] == 0) inv[g] = h;
    }
  }
  std::vector<std::size_t> id(n, n);
  count = 0;
  for (std::size_t g = 0; g < n; ++g) {
    if (id[g] != n) continue;
    for (std::size_t h = 0; h < n; ++h) id[t[t[h][g]][inv[h]]] = count;
    ++count;
  }
  return id;
}

}  // namespace

std::size_t class_count(const Table& table) {
  std::size_t c = 0;
  class_ids(table, c);
  return c;
}

std::vector<long long> burnside_degrees(const Table& t) {
  const std::size_t n = t.size();
  std::size_t r = 0;
  const auto id = class_ids(t, r);
  std::vector<double> size(r, 0);
  std::vector<std::size_t> rep(r, n);
  for (std::size_t g = 0; g < n; ++g) {
    size[id[g]] += 1;
    if (rep[id[g]] == n) rep[id[g]] = g;
  }
  // a[i][j][k] = #{(x, y) : x in C_i, y in C_j, x y = rep_k}
  std::vector<double> a(r * r * r, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t z = t[x][y];
      if (rep[id[z]] == z) a[(id[x] * r + id[y]) * r + id[z]] += 1;
    }
  }
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const double c = coef(rng);
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) m(j, k) += c * a[(i * r + j) * r + k];
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m.cast<std::complex<double>>());
  const auto& vecs = solver.eigenvectors();
  std::vector<long long> degrees;
  for (std::size_t c = 0; c < r; ++c) {
    Eigen::VectorXcd w = vecs.col(c) / vecs(id[0], c);
    double s = 0;
    for (std::size_t k = 0; k < r; ++k) s += std::norm(w(k)) / size[k];
    const double d = std::sqrt(static_cast<double>(n) / s);
    const long long rd = std::llround(d);
    if (std::abs(d - rd) > 1e-6) throw std::runtime_error("non-integral degree from class algebra");
    degrees.push_back(rd);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace oracle
