#include "fuscond/scalar.h"

namespace fuscond {

Complex Scalar::to_complex() const {
  if (is_exact()) return exact().to_complex();
  return std::get<Complex>(value_);
}

Scalar Scalar::conj() const {
  if (is_exact()) return Scalar(exact().conj());
  return Scalar(fuscond::conj(std::get<Complex>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_exact()) return Scalar(exact().inverse());
  return Scalar(Complex(1) / std::get<Complex>(value_));
}

bool Scalar::is_zero(double tol) const {
  if (is_exact()) return exact().is_zero();
  return abs(std::get<Complex>(value_)) <= tol;
}

double Scalar::distance(const Scalar& other) const {
  if (is_exact() && other.is_exact()) {
    try {
      if (exact() == other.exact()) return 0.0;
    } catch (const OrderOverflow&) {
      // compare numerically below
    }
  }
  return to_double(abs(to_complex() - other.to_complex()));
}

bool Scalar::equals(const Scalar& other, double tol) const {
  if (is_exact() && other.is_exact()) {
    try {
      return exact() == other.exact();
    } catch (const OrderOverflow&) {
    }
  }
  return distance(other) <= tol;
}

std::optional<long long> Scalar::to_integer(double tol) const {
  if (is_exact()) {
    if (!exact().is_rational()) return std::nullopt;
    Rational q = exact().rational_value();
    if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
    return boost::multiprecision::numerator(q).convert_to<long long>();
  }
  const Complex& z = std::get<Complex>(value_);
  if (boost::multiprecision::abs(z.imag()) > tol) return std::nullopt;
  return round_to_integer(z.real(), tol);
}

template <typename ExactOp, typename FloatOp>
Scalar& Scalar::combine(const Scalar& o, ExactOp exact_op, FloatOp float_op) {
  if (is_exact() && o.is_exact()) {
    try {
      Cyclotomic result = exact();
      exact_op(result, o.exact());
      value_ = std::move(result);
      return *this;
    } catch (const OrderOverflow&) {
      // fall through to the float backend
    }
  }
  Complex lhs = to_complex();
  float_op(lhs, o.to_complex());
  value_ = std::move(lhs);
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  return combine(o, [](Cyclotomic& a, const Cyclotomic& b) { a += b; },
                 [](Complex& a, const Complex& b) { a += b; });
}

Scalar& Scalar::operator-=(const Scalar& o) {
  return combine(o, [](Cyclotomic& a, const Cyclotomic& b) { a -= b; },
                 [](Complex& a, const Complex& b) { a -= b; });
}

Scalar& Scalar::operator*=(const Scalar& o) {
  return combine(o, [](Cyclotomic& a, const Cyclotomic& b) { a *= b; },
                 [](Complex& a, const Complex& b) { a *= b; });
}

Scalar& Scalar::operator/=(const Scalar& o) {
  return combine(o, [](Cyclotomic& a, const Cyclotomic& b) { a /= b; },
                 [](Complex& a, const Complex& b) { a /= b; });
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(-exact());
  return Scalar(-std::get<Complex>(value_));
}

std::string Scalar::to_string(int digits) const {
  if (is_exact()) return exact().to_string();
  return fuscond::to_string(std::get<Complex>(value_), digits);
}

}  // namespace fuscond
