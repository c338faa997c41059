#include "fuscond/cyclotomic.h"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace fuscond {

namespace {

using IntPoly = std::vector<Integer>;

IntPoly poly_mul_xd_minus_1(const IntPoly& p, unsigned d) {
  IntPoly out(p.size() + d, Integer(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + d] += p[i];
    out[i] -= p[i];
  }
  return out;
}

// Exact division by x^d - 1.
IntPoly poly_div_xd_minus_1(const IntPoly& p, unsigned d) {
  IntPoly rem = p;
  IntPoly q(p.size() - d, Integer(0));
  for (std::size_t i = p.size(); i-- > d;) {
    Integer c = rem[i];
    q[i - d] = c;
    rem[i] -= c;
    rem[i - d] += c;
  }
  return q;
}

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long long>& cyclotomic_polynomial(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<long long>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}: multiply the numerator factors
  // first so every division is exact.
  IntPoly p{Integer(1)};
  std::vector<unsigned> divide_by;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int m = moebius(n / d);
    if (m == 1) p = poly_mul_xd_minus_1(p, d);
    if (m == -1) divide_by.push_back(d);
  }
  for (unsigned d : divide_by) p = poly_div_xd_minus_1(p, d);
  if (p.back() < 0) {
    for (auto& c : p) c = -c;
  }
  std::vector<long long> out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.convert_to<long long>());
  return cache.emplace(n, std::move(out)).first->second;
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(Rational q, unsigned order)
    : order_(order), coeffs_(euler_phi(order), Rational(0)) {
  coeffs_[0] = std::move(q);
}

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rational> reduced)
    : order_(order), coeffs_(std::move(reduced)) {}

std::vector<Rational> Cyclotomic::reduce(unsigned order, std::vector<Rational> c) {
  if (order == 0 || order > kMaxCyclotomicOrder) {
    throw OrderOverflow("cyclotomic order " + std::to_string(order) + " out of range");
  }
  if (c.size() > order) {
    for (std::size_t k = order; k < c.size(); ++k) c[k % order] += c[k];
    c.resize(order);
  }
  const auto& phi_poly = cyclotomic_polynomial(order);
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t k = c.size(); k-- > deg;) {
    if (c[k] == 0) continue;
    Rational lead = c[k];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi_poly[j] != 0) c[k - deg + j] -= lead * phi_poly[j];
    }
    c[k] = 0;
  }
  c.resize(deg, Rational(0));
  return c;
}

unsigned Cyclotomic::common_order(unsigned a, unsigned b) {
  unsigned long long l = std::lcm<unsigned long long>(a, b);
  if (l > kMaxCyclotomicOrder) {
    throw OrderOverflow("common cyclotomic order " + std::to_string(l) + " exceeds " +
                        std::to_string(kMaxCyclotomicOrder));
  }
  return static_cast<unsigned>(l);
}

Cyclotomic Cyclotomic::from_powers(unsigned order, const std::vector<Rational>& coeffs) {
  return Cyclotomic(order, reduce(order, coeffs));
}

Cyclotomic Cyclotomic::zeta(unsigned order, long long power) {
  long long k = power % static_cast<long long>(order);
  if (k < 0) k += order;
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
  c[k] = 1;
  return from_powers(order, c);
}

Cyclotomic Cyclotomic::sqrt_integer(long long m) {
  if (m < 0) throw StructuralError("sqrt_integer needs a nonnegative argument");
  if (m == 0) return Cyclotomic();
  long long square = 1;
  long long rest = m;
  std::vector<long long> primes;
  for (long long p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square *= p;
    if (e % 2 == 1) primes.push_back(p);
  }
  if (rest > 1) primes.push_back(rest);

  Cyclotomic result{Rational(square)};
  for (long long p : primes) {
    if (p == 2) {
      result *= zeta(8, 1) + zeta(8, -1);
      continue;
    }
    // Quadratic Gauss sum g = sum (a/p) zeta_p^a, g^2 = (-1)^{(p-1)/2} p.
    std::vector<Rational> c(static_cast<std::size_t>(p), Rational(0));
    for (long long a = 1; a < p; ++a) c[(a * a) % p] += 1;
    for (long long a = 1; a < p; ++a) c[a] -= 1;
    Cyclotomic g = from_powers(static_cast<unsigned>(p), c);
    if (p % 4 == 1) {
      result *= g;
    } else {
      result *= -(zeta(4, 1) * g);  // g = i sqrt(p)
    }
  }
  return result;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw StructuralError("cyclotomic value is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embed(unsigned order) const {
  if (order == order_) return *this;
  if (order % order_ != 0) throw StructuralError("embedding needs a multiple of the order");
  const unsigned step = order / order_;
  std::vector<Rational> c((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * step] = coeffs_[k];
  return Cyclotomic(order, reduce(order, std::move(c)));
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> c(order_, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[(order_ - k) % order_] += coeffs_[k];
  return Cyclotomic(order_, reduce(order_, std::move(c)));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw NumericalError("inverse of zero cyclotomic");
  if (is_rational()) return Cyclotomic(1 / coeffs_[0], order_);
  // Solve (multiplication by this) u = 1 over Q.
  const std::size_t n = coeffs_.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> col(j + n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) col[j + k] = coeffs_[k];
    col = reduce(order_, std::move(col));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  m[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw NumericalError("singular multiplication map in Q(zeta)");
    std::swap(m[piv], m[c]);
    Rational inv = 1 / m[c][c];
    for (std::size_t j = c; j <= n; ++j) m[c][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = m[i][n];
  return Cyclotomic(order_, std::move(u));
}

unsigned Cyclotomic::root_of_unity_order() const {
  Complex z = to_complex();
  if (abs(abs(z) - 1) > Real(1e-20)) return 0;
  const unsigned big = order_ % 2 == 0 ? order_ : 2 * order_;
  Real turns = boost::multiprecision::atan2(z.imag(), z.real()) / (2 * pi());
  long long k = boost::multiprecision::round(turns * big).convert_to<long long>();
  k %= static_cast<long long>(big);
  if (k < 0) k += big;
  if (big > kMaxCyclotomicOrder) return 0;
  if (embed(big) != zeta(big, k)) return 0;
  return big / std::gcd(big, static_cast<unsigned>(k == 0 ? big : k));
}

Complex Cyclotomic::to_complex() const {
  Complex out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    out += Complex::root_of_unity(static_cast<long long>(k), order_) * to_real(coeffs_[k]);
  }
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    unsigned l = common_order(order_, o.order_);
    *this = embed(l);
    return *this += o.embed(l);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    unsigned l = common_order(order_, o.order_);
    *this = embed(l);
    return *this -= o.embed(l);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    if (o.is_rational()) {
      for (auto& c : coeffs_) c *= o.coeffs_[0];
      return *this;
    }
    if (is_rational()) {
      Rational q = coeffs_[0];
      *this = o;
      for (auto& c : coeffs_) c *= q;
      return *this;
    }
    unsigned l = common_order(order_, o.order_);
    *this = embed(l);
    return *this *= o.embed(l);
  }
  const std::size_t n = coeffs_.size();
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = reduce(order_, std::move(prod));
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  unsigned l = Cyclotomic::common_order(a.order_, b.order_);
  return a.embed(l).coeffs_ == b.embed(l).coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    std::string c = fuscond::to_string(coeffs_[k]);
    if (!first) os << (c[0] == '-' ? " - " : " + ");
    if (!first && c[0] == '-') c = c.substr(1);
    if (k == 0) {
      os << c;
    } else {
      if (c != "1") os << (c == "-1" ? "-" : c + "*");
      os << "z" << order_;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string to_string(const Rational& q) {
  std::string num = boost::multiprecision::numerator(q).str();
  Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num;
  return num + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("malformed rational '" + text + "'");
  }
}

}  // namespace fuscond
