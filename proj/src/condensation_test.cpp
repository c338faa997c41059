#include "fuscond/condensation.h"

#include <gtest/gtest.h>

#include "fuscond/errors.h"
#include "fuscond/examples.h"

using namespace fuscond;

TEST(CheckBundle, BuiltinsPass) {
  for (auto f : {Family::ToricCode, Family::IsingSquare, Family::VLplusOrbifold}) {
    auto b = build({f, 1, std::nullopt});
    auto rep = check_bundle(b);
    EXPECT_TRUE(rep.ok()) << b.name << "\n" << rep.to_markdown();
  }
}

TEST(CheckBundle, NontrivialTwistRejected) {
  auto b = build({Family::ToricCode, 1, std::nullopt});
  b.mult = {1, 0, 0, 1};  // 1 + f, theta_f = -1
  auto rep = check_bundle(b);
  EXPECT_TRUE(rep.has_violation("trivial-twist"));
}

TEST(CheckBundle, DisconnectedRejected) {
  auto b = build({Family::ToricCode, 1, std::nullopt});
  b.mult = {2, 0, 0, 0};
  EXPECT_TRUE(check_bundle(b).has_violation("connected"));
}

TEST(CheckBundle, DimensionMismatchRejected) {
  auto b = build({Family::VLplusOrbifold, 1, std::nullopt});
  b.local = Subring({0});
  auto rep = check_bundle(b);
  EXPECT_TRUE(rep.has_violation("local-dimension"));
}

TEST(SchurWeyl, ToricCode) {
  auto b = build({Family::ToricCode, 1, std::nullopt});
  auto sw = schur_weyl(b);
  EXPECT_EQ(sw.kernel_dim, 0);
  EXPECT_EQ(sw.block_m, (std::vector<long long>{1, 1}));
  EXPECT_TRUE(sw.matched);
  EXPECT_TRUE(sw.checks.ok()) << sw.checks.to_markdown();
  ASSERT_TRUE(block_of(sw, b.ambient.index_of("e")).has_value());
  EXPECT_FALSE(block_of(sw, b.ambient.index_of("m")).has_value());
}

TEST(SchurWeyl, OrbifoldKernel) {
  auto b = build({Family::VLplusOrbifold, 1, std::nullopt});
  auto sw = schur_weyl(b);
  EXPECT_EQ(sw.kernel_dim, 2);
  EXPECT_EQ(sw.ideal_dim, 2);
}

TEST(SchurWeyl, WrongMultiplicitiesViolateTheorem) {
  auto b = build({Family::ToricCode, 1, std::nullopt});
  b.mult = {1, 0, 0, 0};
  EXPECT_THROW(schur_weyl(b), TheoremViolation);
}

TEST(SchurWeyl, IndicatorOnLocalSimples) {
  auto b = build({Family::VLplusOrbifold, 1, std::nullopt});
  auto sw = schur_weyl(b);
  const std::size_t s = b.module_ring.rank();
  for (std::size_t x = 0; x < b.mult.size(); ++x) {
    if (b.mult[x] == 0) continue;
    for (std::size_t y : b.local.members) {
      Element a(s);
      a[y] = Complex(1);
      Complex v = indicator(b, sw, x, a);
      EXPECT_NEAR(to_double(v.real()), b.mult[x] * to_double(b.dA[y].real_part()), 1e-9);
    }
  }
  Element a(s);
  EXPECT_THROW(indicator(b, sw, 2, a), StructuralError);
}

TEST(Codegree, IsingSquare) {
  auto b = build({Family::IsingSquare, 1, std::nullopt});
  auto sw = schur_weyl(b);
  auto rep = codegree_check(b, sw);
  EXPECT_TRUE(rep.ok()) << rep.to_markdown();
}

TEST(Idempotents, LocalIdempotentIsCentral) {
  auto b = build({Family::VLplusOrbifold, 1, std::nullopt});
  Element e = e_sub(b, b.local);
  EXPECT_LT(idempotent_residual(b, e), 1e-12);
  EXPECT_LT(central_residual(b, e), 1e-12);
}

TEST(Ambient, ProductSplitsS) {
  auto b = build({Family::IsingSquare, 1, std::nullopt});
  const auto& a = b.ambient;
  EXPECT_EQ(a.kind(), Ambient::Kind::Product);
  const std::size_t ss = a.index_of("sigma:sigma");
  // S[sigma][sigma] * conj(S[sigma][sigma]) = 0
  EXPECT_TRUE(a.s(ss, ss).is_zero(1e-12));
  EXPECT_TRUE(a.global_dim().equals(Scalar(16), 1e-12));
}
