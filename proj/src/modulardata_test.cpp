#include "fuscond/modulardata.h"

#include <gtest/gtest.h>

#include "fuscond/examples.h"

using namespace fuscond;

TEST(ModularData, ToricAndIsingValidate) {
  EXPECT_TRUE(validate(toric_code(), 1e-9).ok());
  EXPECT_TRUE(validate(ising(), 1e-9).ok());
}

TEST(ModularData, IsingVerlinde) {
  BasedRing r = verlinde(ising());
  EXPECT_EQ(r.N(2, 2, 0), 1);
  EXPECT_EQ(r.N(2, 2, 1), 1);
  EXPECT_EQ(r.N(2, 2, 2), 0);
  EXPECT_EQ(r.N(1, 2, 2), 1);
  EXPECT_EQ(r.N(1, 1, 0), 1);
}

TEST(ModularData, DimsAndGlobalDim) {
  auto md = ising();
  EXPECT_TRUE(md.global_dim().equals(Scalar(4), 1e-12));
  EXPECT_TRUE(md.dims()[2].equals(Scalar(Cyclotomic::sqrt_integer(2)), 1e-12));
  EXPECT_TRUE(md.global_dim().is_exact());
}

TEST(ModularData, BrokenUnitarityIsReported) {
  auto md = toric_code();
  ScalarMatrix s = md.s_matrix();
  s[1][1] = Scalar(-1);
  ModularData bad(md.labels(), md.duals(), s, md.twists());
  auto rep = validate(bad, 1e-9);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(rep.has_violation("s-unitary"));
}

TEST(ModularData, NonRootTwistIsReported) {
  auto md = toric_code();
  ScalarVector t = md.twists();
  t[3] = Scalar(2);
  ModularData bad(md.labels(), md.duals(), md.s_matrix(), t);
  EXPECT_TRUE(validate(bad, 1e-9).has_violation("twist-root-of-unity"));
}

TEST(ModularData, CharactersRowZeroAreDims) {
  auto md = ising();
  auto chi = characters(md);
  for (std::size_t y = 0; y < md.rank(); ++y) EXPECT_TRUE(chi[0][y].equals(md.dims()[y], 1e-12));
}

TEST(ModularData, CentralIdempotents) {
  for (const auto& md : {toric_code(), ising()}) {
    auto ic = check_central_idempotents(md);
    EXPECT_LT(ic.orthogonality, 1e-9);
    EXPECT_LT(ic.completeness, 1e-9);
  }
}

TEST(ModularData, BalancingReproducesIsing) {
  auto md = ising();
  auto s = balancing_s_matrix(md.fusion_ring(), md.dims(), md.twists());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(s[i][j].equals(md.s(i, j), 1e-12)) << i << "," << j;
}

TEST(ModularData, ReverseConjugates) {
  auto r = reverse(ising());
  EXPECT_TRUE(r.twist(2).equals(Scalar(Cyclotomic::zeta(16, -1)), 1e-12));
  EXPECT_TRUE(validate(r, 1e-9).ok());
}

TEST(ModularData, DeligneProductRank) {
  auto p = deligne_product(toric_code(), ising());
  EXPECT_EQ(p.rank(), 12u);
  EXPECT_TRUE(p.has_attached_fusion());
  EXPECT_TRUE(validate(p, 1e-9).ok());
}

TEST(ModularData, A2nSidesAreModular) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_TRUE(validate(a2n_side(n, false), 1e-9).ok()) << n;
    EXPECT_TRUE(validate(a2n_side(n, true), 1e-9).ok()) << n;
  }
}
