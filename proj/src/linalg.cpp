#include "fuscond/linalg.h"

#include <algorithm>

namespace fuscond {

bool RowReducer::add_row(RationalVector row) {
  row.resize(cols_, Rational(0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = row[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t c = pivots_[r]; c < cols_; ++c) {
      if (rows_[r][c] != 0) row[c] -= f * rows_[r][c];
    }
  }
  std::size_t p = 0;
  while (p < cols_ && row[p] == 0) ++p;
  if (p == cols_) return false;
  const Rational inv = 1 / row[p];
  for (std::size_t c = p; c < cols_; ++c) row[c] *= inv;
  // Keep the form reduced: clear the new pivot column from existing rows.
  for (auto& existing : rows_) {
    const Rational f = existing[p];
    if (f == 0) continue;
    for (std::size_t c = p; c < cols_; ++c) {
      if (row[c] != 0) existing[c] -= f * row[c];
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(row));
  return true;
}

std::vector<std::size_t> RowReducer::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!std::binary_search(pivots_.begin(), pivots_.end(), c)) out.push_back(c);
  }
  return out;
}

RationalMatrix RowReducer::nullspace() const {
  RationalMatrix basis;
  for (std::size_t f : free_columns()) {
    RationalVector v(cols_, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector characteristic_polynomial(const RationalMatrix& a) {
  // Faddeev-LeVerrier: M_i = A M_{i-1} + c_{n-i+1} I, c_{n-i} = -tr(A M_i)/i.
  const std::size_t n = a.size();
  RationalVector c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix m(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 1; i <= n; ++i) {
    RationalMatrix am(n, RationalVector(n, Rational(0)));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a[r][k] == 0) continue;
        for (std::size_t col = 0; col < n; ++col) {
          if (m[k][col] != 0) am[r][col] += a[r][k] * m[k][col];
        }
      }
    }
    for (std::size_t r = 0; r < n; ++r) am[r][r] += c[n - i + 1];
    m = std::move(am);
    Rational tr = 0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a[r][k] != 0 && m[k][r] != 0) tr += a[r][k] * m[k][r];
      }
    }
    c[n - i] = -tr / static_cast<long>(i);
  }
  return c;
}

RationalVector derivative(const RationalVector& p) {
  if (p.size() <= 1) return {Rational(0)};
  RationalVector d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}

namespace {

void trim(RationalVector& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

bool is_zero_poly(const RationalVector& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

std::size_t gcd_degree(RationalVector p, RationalVector q) {
  trim(p);
  trim(q);
  if (is_zero_poly(q)) return p.size() - 1;
  while (!is_zero_poly(q)) {
    // p <- p mod q
    while (p.size() >= q.size() && !is_zero_poly(p)) {
      const Rational f = p.back() / q.back();
      const std::size_t shift = p.size() - q.size();
      for (std::size_t i = 0; i < q.size(); ++i) p[i + shift] -= f * q[i];
      p.pop_back();
      trim(p);
      if (p.size() < q.size()) break;
    }
    std::swap(p, q);
  }
  trim(p);
  return p.size() - 1;
}

}  // namespace fuscond
