#include "fuscond/numeric.h"

#include <algorithm>
#include <map>

#include "fuscond/errors.h"

namespace fuscond {

namespace {

struct PrecisionInit {
  PrecisionInit() { Real::default_precision(64); }
};
const PrecisionInit precision_init;

}  // namespace

Settings& settings() {
  static Settings s;
  return s;
}

void set_float_digits(unsigned digits) {
  if (digits < 20) throw StructuralError("float backend needs at least 20 digits");
  settings().digits = digits;
  Real::default_precision(digits);
}

Real pi() {
  static std::map<unsigned, Real> cache;
  auto it = cache.find(settings().digits);
  if (it != cache.end()) return it->second;
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  cache.emplace(settings().digits, p);
  return p;
}

Complex& Complex::operator*=(const Complex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real den = o.re_ * o.re_ + o.im_ * o.im_;
  if (den == 0) throw NumericalError("complex division by zero");
  Real re = (re_ * o.re_ + im_ * o.im_) / den;
  im_ = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  return *this;
}

Complex Complex::root_of_unity(long long k, long long n) {
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return Complex(1);
  if (2 * k == n) return Complex(-1);
  if (4 * k == n) return Complex(Real(0), Real(1));
  if (4 * k == 3 * n) return Complex(Real(0), Real(-1));
  Real angle = 2 * pi() * k / n;
  return Complex(boost::multiprecision::cos(angle), boost::multiprecision::sin(angle));
}

Complex conj(const Complex& z) { return Complex(z.real(), -z.imag()); }

Real norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Real abs(const Complex& z) { return boost::multiprecision::sqrt(norm(z)); }

Complex sqrt(const Complex& z) {
  Real r = abs(z);
  if (r == 0) return Complex();
  Real re = boost::multiprecision::sqrt((r + z.real()) / 2);
  Real im = boost::multiprecision::sqrt((r - z.real()) / 2);
  if (z.imag() < 0) im = -im;
  return Complex(re, im);
}

std::string to_string(const Complex& z, int digits) {
  std::string re = z.real().str(digits);
  if (boost::multiprecision::abs(z.imag()) < Real(1e-40)) return re;
  std::string im = boost::multiprecision::abs(z.imag()).str(digits);
  return re + (z.imag() < 0 ? " - " : " + ") + im + "i";
}

double to_double(const Real& r) { return r.convert_to<double>(); }

Real to_real(const Rational& q) { return Real(q); }

Complex CMatrix::trace() const {
  Complex t;
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) t += (*this)(i, i);
  return t;
}

Real max_abs(const Element& v) {
  Real m = 0;
  for (const auto& z : v) m = std::max(m, abs(z));
  return m;
}

Element operator-(const Element& a, const Element& b) {
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Element operator+(const Element& a, const Element& b) {
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Element scale(const Element& a, const Complex& s) {
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

namespace {

Complex horner(const std::vector<Complex>& c, const Complex& z) {
  Complex acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
  return acc;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  std::vector<Complex> c = coeffs;
  while (!c.empty() && norm(c.back()) == 0) c.pop_back();
  if (c.size() <= 1) return {};
  const std::size_t deg = c.size() - 1;
  Complex lead = c.back();
  for (auto& a : c) a /= lead;
  if (deg == 1) return {-c[0]};

  std::vector<Complex> dc(deg);
  for (std::size_t i = 1; i <= deg; ++i) dc[i - 1] = c[i] * Real(static_cast<long>(i));

  // Fujiwara-style radius bound for the starting circle.
  Real radius = 0;
  for (std::size_t i = 0; i < deg; ++i) {
    Real bound = boost::multiprecision::pow(abs(c[i]), Real(1) / Real(static_cast<long>(deg - i)));
    radius = std::max(radius, bound);
  }
  radius = 2 * radius + 1;

  std::vector<Complex> z(deg);
  for (std::size_t k = 0; k < deg; ++k) {
    Real angle = 2 * pi() * Real(static_cast<long>(k)) / Real(static_cast<long>(deg)) + Real(0.4);
    z[k] = Complex(radius * boost::multiprecision::cos(angle),
                   radius * boost::multiprecision::sin(angle));
  }

  const Real eps = boost::multiprecision::pow(Real(10), -Real(static_cast<long>(settings().digits) - 8));
  constexpr int kMaxIter = 2000;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    Real worst = 0;
    for (std::size_t k = 0; k < deg; ++k) {
      Complex p = horner(c, z[k]);
      if (norm(p) == 0) continue;
      Complex ratio = p / horner(dc, z[k]);
      Complex sum;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != k) sum += Complex(1) / (z[k] - z[j]);
      }
      Complex w = ratio / (Complex(1) - ratio * sum);
      z[k] -= w;
      Real scale_k = std::max(Real(1), abs(z[k]));
      worst = std::max(worst, abs(w) / scale_k);
    }
    if (worst <= eps) return z;
  }
  throw NumericalError("polynomial root iteration did not converge");
}

std::optional<long long> round_to_integer(const Real& x, double tolerance) {
  Real r = boost::multiprecision::round(x);
  if (boost::multiprecision::abs(x - r) > tolerance) return std::nullopt;
  return r.convert_to<long long>();
}

}  // namespace fuscond
