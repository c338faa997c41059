#include <gtest/gtest.h>

#include "fuscond/cyclotomic.h"
#include "fuscond/scalar.h"

namespace fuscond {
namespace {

double approx(const Cyclotomic& c) { return to_double(c.to_complex().real()); }

TEST(Cyclotomic, PolynomialsMatchKnownValues) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long long>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long long>{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p105 = cyclotomic_polynomial(105);
  EXPECT_EQ(p105.size(), 49u);
  EXPECT_EQ(p105[7], -2);
  for (unsigned n = 1; n <= 60; ++n) EXPECT_EQ(cyclotomic_polynomial(n).size(), euler_phi(n) + 1);
}

TEST(Cyclotomic, SquareRootsArePositive) {
  for (long long m : {2, 3, 5, 7, 8, 11, 12, 13, 18, 45}) {
    Cyclotomic r = Cyclotomic::sqrt_integer(m);
    EXPECT_EQ(r * r, Cyclotomic(m)) << m;
    EXPECT_NEAR(approx(r), std::sqrt(static_cast<double>(m)), 1e-12) << m;
    EXPECT_NEAR(to_double(r.to_complex().imag()), 0.0, 1e-12);
  }
  EXPECT_TRUE(Cyclotomic::sqrt_integer(49).is_rational());
}

TEST(Cyclotomic, InverseAndMixedOrders) {
  Cyclotomic a = Cyclotomic::zeta(8) + Cyclotomic(3);
  EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
  Cyclotomic b = Cyclotomic::zeta(3) + Cyclotomic::zeta(4, 1);
  Cyclotomic c = a * b;
  EXPECT_EQ(c.order(), 24u);
  EXPECT_EQ(c / b, a);
  // 1 + zeta_3 + zeta_3^2 = 0
  EXPECT_TRUE((Cyclotomic(1) + Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2)).is_zero());
  EXPECT_EQ(Cyclotomic::zeta(6, 1).conj(), Cyclotomic::zeta(6, 5));
}

TEST(Cyclotomic, RootOfUnityOrder) {
  EXPECT_EQ(Cyclotomic::zeta(16, 1).root_of_unity_order(), 16u);
  EXPECT_EQ(Cyclotomic::zeta(12, 4).root_of_unity_order(), 3u);
  EXPECT_EQ((-Cyclotomic::zeta(8, 1)).root_of_unity_order(), 8u);
  EXPECT_EQ((-Cyclotomic::zeta(3, 1)).root_of_unity_order(), 6u);
  EXPECT_EQ(Cyclotomic(1).root_of_unity_order(), 1u);
  EXPECT_EQ(Cyclotomic(-1).root_of_unity_order(), 2u);
  EXPECT_EQ(Cyclotomic(2).root_of_unity_order(), 0u);
}

TEST(Cyclotomic, RationalParsing) {
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(to_string(Rational(6, 8)), "3/4");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Scalar, FallsBackToFloatOnOrderOverflow) {
  Scalar a(Cyclotomic::zeta(2003));
  Scalar b(Cyclotomic::zeta(7));
  Scalar c = a * b;
  EXPECT_FALSE(c.is_exact());
  Complex expect = Complex::root_of_unity(1, 2003) * Complex::root_of_unity(1, 7);
  EXPECT_LT(to_double(abs(c.to_complex() - expect)), 1e-40);
}

TEST(Scalar, IntegerRecovery) {
  EXPECT_EQ(Scalar(7).to_integer(1e-9), 7);
  Scalar s(Cyclotomic::sqrt_integer(3));
  EXPECT_EQ((s * s).to_integer(1e-9), 3);
  EXPECT_FALSE(s.to_integer(1e-9).has_value());
  EXPECT_EQ(Scalar::real(4.0000000001).to_integer(1e-6), 4);
}

}  // namespace
}  // namespace fuscond
