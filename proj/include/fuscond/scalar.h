#pragma once

#include <string>
#include <variant>

#include "fuscond/cyclotomic.h"
#include "fuscond/numeric.h"

namespace fuscond {

/// A complex number held either exactly (cyclotomic) or as a multiprecision
/// float. Arithmetic stays exact while both operands are exact and their
/// common field fits under kMaxCyclotomicOrder, and degrades to floats
/// otherwise.
class Scalar {
 public:
  Scalar() : value_(Cyclotomic()) {}
  Scalar(int v) : value_(Cyclotomic(v)) {}  // NOLINT(implicit)
  Scalar(Cyclotomic c) : value_(std::move(c)) {}  // NOLINT(implicit)
  Scalar(Complex z) : value_(std::move(z)) {}  // NOLINT(implicit)
  static Scalar rational(Rational q) { return Scalar(Cyclotomic(std::move(q))); }
  static Scalar real(double v) { return Scalar(Complex(v)); }

  bool is_exact() const { return std::holds_alternative<Cyclotomic>(value_); }
  const Cyclotomic& exact() const { return std::get<Cyclotomic>(value_); }
  Complex to_complex() const;
  Real real_part() const { return to_complex().real(); }

  Scalar conj() const;
  Scalar inverse() const;

  /// Exact zero test for exact values, |z| <= tol otherwise.
  bool is_zero(double tol) const;
  /// Exact comparison when both are exact, tolerance comparison otherwise.
  bool equals(const Scalar& other, double tol) const;
  /// |this - other| as a double, zero for exactly equal exact values.
  double distance(const Scalar& other) const;

  /// Nearest integer if the value is (within tolerance) a real integer.
  std::optional<long long> to_integer(double tol) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  std::string to_string(int digits = 17) const;

 private:
  template <typename ExactOp, typename FloatOp>
  Scalar& combine(const Scalar& o, ExactOp exact_op, FloatOp float_op);

  std::variant<Cyclotomic, Complex> value_;
};

}  // namespace fuscond
