#include "fuscond/basering.h"

#include <gtest/gtest.h>

#include <cmath>

#include "fuscond/errors.h"

using namespace fuscond;

namespace {

BasedRing fibonacci() {
  // 1, tau with tau^2 = 1 + tau
  std::vector<int> f(8, 0);
  auto at = [&](int i, int j, int k) -> int& { return f[(i * 2 + j) * 2 + k]; };
  at(0, 0, 0) = 1;
  at(0, 1, 1) = 1;
  at(1, 0, 1) = 1;
  at(1, 1, 0) = 1;
  at(1, 1, 1) = 1;
  return BasedRing({"1", "tau"}, {0, 1}, f);
}

BasedRing cyclic(int n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return group_ring(t);
}

}  // namespace

TEST(BasedRing, GroupRingIsValid) {
  auto r = cyclic(6);
  auto rep = validate(r);
  EXPECT_TRUE(rep.ok()) << rep.to_markdown();
  EXPECT_EQ(r.dual(1), 5u);
  EXPECT_EQ(r.dual(3), 3u);
}

TEST(BasedRing, RejectsBadShapes) {
  EXPECT_THROW(BasedRing({"1", "a"}, {0, 1}, std::vector<int>(7, 0)), StructuralError);
  EXPECT_THROW(BasedRing({"1", "a"}, {0, 2}, std::vector<int>(8, 0)), StructuralError);
}

TEST(BasedRing, DetectsRewiredProduct) {
  // Z3 with a product rewired: g * g = 1 instead of g^2 breaks associativity.
  auto z = cyclic(3).fusion_flat();
  auto idx = [](int i, int j, int k) { return (i * 3 + j) * 3 + k; };
  z[idx(1, 1, 2)] = 0;
  z[idx(1, 1, 0)] = 1;
  BasedRing broken({"1", "g", "h"}, {0, 2, 1}, z);
  auto rep = validate(broken);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(rep.has_violation("duality") || rep.has_violation("associativity"));
}

TEST(BasedRing, UnitViolationIsReported) {
  auto f = cyclic(2).fusion_flat();
  f[(0 * 2 + 1) * 2 + 1] = 0;
  f[(0 * 2 + 1) * 2 + 0] = 1;
  BasedRing r({"1", "a"}, {0, 1}, f);
  auto rep = validate(r);
  EXPECT_TRUE(rep.has_violation("unit"));
}

TEST(BasedRing, FrobeniusPerronGoldenRatio) {
  auto d = fp_dims(fibonacci());
  EXPECT_EQ(d.source, DimSource::FrobeniusPerron);
  EXPECT_NEAR(to_double(d[1].real_part()), (1 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_TRUE(check_dims(fibonacci(), d, 1e-9).ok());
}

TEST(BasedRing, CheckDimsRejectsWrongValues) {
  DimVector bad{{Scalar(1), Scalar(2)}, DimSource::Supplied};
  EXPECT_FALSE(check_dims(fibonacci(), bad, 1e-9).ok());
}

TEST(BasedRing, SubringGeneration) {
  auto r = cyclic(12);
  auto s = subring_generated(r, {4});
  EXPECT_EQ(s.members, (std::vector<std::size_t>{0, 4, 8}));
  EXPECT_TRUE(is_subring(r, s));
  EXPECT_FALSE(is_subring(r, Subring({0, 4})));
  EXPECT_EQ(subring_generated(r, s.members), s);
}

TEST(BasedRing, EnumerateCyclicSubgroups) {
  // Subgroups of Z_n correspond to divisors.
  EXPECT_EQ(enumerate_subrings(cyclic(12), Subring({0})).size(), 6u);
  EXPECT_EQ(enumerate_subrings(cyclic(7), Subring({0})).size(), 2u);
  EXPECT_EQ(enumerate_subrings(cyclic(12), Subring({0, 6})).size(), 4u);
}

TEST(BasedRing, EnumerateRefusesLargeRank) {
  EXPECT_THROW(enumerate_subrings(cyclic(25), Subring({0})), CapabilityError);
}

TEST(BasedRing, DeligneProduct) {
  auto p = deligne_product(cyclic(2), fibonacci());
  EXPECT_EQ(p.rank(), 4u);
  EXPECT_EQ(p.name(3), "g1:tau");
  EXPECT_TRUE(validate(p).ok());
  EXPECT_EQ(p.N(3, 3, 0), 1);
  EXPECT_EQ(p.N(3, 3, 1), 1);
}

TEST(BasedRing, Invertibles) {
  EXPECT_EQ(invertible_elements(fibonacci()), (std::vector<std::size_t>{0}));
  EXPECT_EQ(invertible_elements(cyclic(4)).size(), 4u);
}

TEST(BasedRing, SubringDim) {
  auto r = fibonacci();
  auto d = fp_dims(r);
  EXPECT_NEAR(to_double(subring_dim(r, d, Subring({0, 1})).real_part()), (5 + std::sqrt(5.0)) / 2, 1e-12);
}
