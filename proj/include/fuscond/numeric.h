#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fuscond {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Process-wide numeric configuration. The CLI writes these once at startup.
struct Settings {
  double tol = 1e-9;                 // residual threshold for identity checks
  double round_tol = 1e-6;           // integer/rational reconstruction
  double gap = 1e-7;                 // eigenvalue clustering threshold
  std::uint64_t seed = 0xC0FFEE;     // idempotent-splitting PRNG seed
  unsigned digits = 64;              // significant decimal digits of Real
};

Settings& settings();

/// Sets the working precision of every Real created afterwards.
void set_float_digits(unsigned digits);

Real pi();

/// Complex number over Real. std::complex is only specified for the built-in
/// floating types, so multiprecision values get their own small type.
class Complex {
 public:
  Complex() : re_(0), im_(0) {}
  Complex(Real re) : re_(std::move(re)), im_(0) {}  // NOLINT(implicit)
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(int v) : re_(v), im_(0) {}  // NOLINT(implicit)
  Complex(double v) : re_(v), im_(0) {}  // NOLINT(implicit)

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }

  Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& r) { re_ *= r; im_ *= r; return *this; }
  Complex& operator/=(const Real& r) { re_ /= r; im_ /= r; return *this; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& r) { return a *= r; }
  friend Complex operator*(const Real& r, Complex a) { return a *= r; }
  friend Complex operator/(Complex a, const Real& r) { return a /= r; }
  Complex operator-() const { return Complex(-re_, -im_); }

  /// e^{2 pi i k / n}
  static Complex root_of_unity(long long k, long long n);

 private:
  Real re_;
  Real im_;
};

Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Complex sqrt(const Complex& z);
std::string to_string(const Complex& z, int digits = 17);
double to_double(const Real& r);

Real to_real(const Rational& q);

/// Dense row-major complex matrix.
struct CMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> data;

  CMatrix() = default;
  CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Complex& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  Complex trace() const;
};

using Element = std::vector<Complex>;

Real max_abs(const Element& v);
Element operator-(const Element& a, const Element& b);
Element operator+(const Element& a, const Element& b);
Element scale(const Element& a, const Complex& s);

/// Roots of a polynomial with complex coefficients, lowest degree first.
/// Aberth-Ehrlich iteration; throws NumericalError on non-convergence.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

/// Nearest integer to x if within tolerance, otherwise std::nullopt.
std::optional<long long> round_to_integer(const Real& x, double tolerance);

}  // namespace fuscond
