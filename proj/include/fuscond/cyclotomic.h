#pragma once

#include <string>
#include <vector>

#include "fuscond/errors.h"
#include "fuscond/numeric.h"

namespace fuscond {

/// Largest cyclotomic order handled exactly; larger fields fall back to floats.
inline constexpr unsigned kMaxCyclotomicOrder = 2400;

/// Thrown when combining two elements would need a field above kMaxCyclotomicOrder.
class OrderOverflow : public Error {
 public:
  using Error::Error;
};

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

/// Element of Q(zeta_N), stored in the power basis 1, zeta, ..., zeta^{phi(N)-1}
/// after reduction modulo the N-th cyclotomic polynomial. The representation is
/// canonical for a fixed N; elements of different orders are compared and
/// combined inside Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic();  // zero in Q(zeta_1)
  explicit Cyclotomic(Rational q, unsigned order = 1);
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}  // NOLINT(implicit)

  /// Coefficients over powers zeta_N^0..zeta_N^{len-1}; any length is accepted
  /// and reduced.
  static Cyclotomic from_powers(unsigned order, const std::vector<Rational>& coeffs);
  static Cyclotomic zeta(unsigned order, long long power = 1);
  /// Positive square root of a nonnegative integer, built from quadratic Gauss sums.
  static Cyclotomic sqrt_integer(long long m);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  /// Same number viewed in Q(zeta_M); M must be a multiple of order().
  Cyclotomic embed(unsigned order) const;
  Cyclotomic conj() const;
  Cyclotomic inverse() const;
  /// Smallest k >= 1 with x^k = 1 if x is a root of unity, else 0.
  unsigned root_of_unity_order() const;

  Complex to_complex() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Cyclotomic(unsigned order, std::vector<Rational> reduced);
  static std::vector<Rational> reduce(unsigned order, std::vector<Rational> c);
  static unsigned common_order(unsigned a, unsigned b);

  unsigned order_;
  std::vector<Rational> coeffs_;
};

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace fuscond
