#include "fuscond/galois.h"

#include <gtest/gtest.h>

#include "fuscond/examples.h"

using namespace fuscond;

TEST(Lattice, ToricCodeHasTwoElements) {
  auto b = build({Family::ToricCode, 1, std::nullopt});
  EXPECT_EQ(lattice(b).size(), 2u);
}

TEST(Lattice, TambaraYamagamiForcesFull) {
  auto b = build({Family::VLplusOrbifold, 1, std::nullopt});
  auto l = lattice(b);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0].size() + l[1].size(), 7u);
}

TEST(Correspondence, ToricCode) {
  auto b = build({Family::ToricCode, 1, std::nullopt});
  auto sw = schur_weyl(b);
  auto g = verify_correspondence(b, sw);
  EXPECT_TRUE(g.ok()) << g.checks.to_markdown();
  auto vec = g.find(Subring({0}));
  ASSERT_TRUE(vec);
  EXPECT_TRUE(g.entries[*vec].d_inv.equals(Scalar(2), 1e-12));
  EXPECT_EQ(g.hasse.size(), 1u);
}

TEST(Correspondence, A2nEndpointsAndFx) {
  auto b = build({Family::A2n, 1, std::nullopt});
  auto sw = schur_weyl(b);
  auto g = verify_correspondence(b, sw);
  EXPECT_TRUE(g.ok()) << g.checks.to_markdown();
  EXPECT_TRUE(g.bijective);
  EXPECT_FALSE(g.multiplicities_distinct);  // H2 and H3 share n'
  const auto& r = b.module_ring;
  Subring fx({0, r.index_of("t"), r.index_of("t2"), r.index_of("X")});
  auto i = g.find(fx);
  ASSERT_TRUE(i);
  EXPECT_EQ(describe_multiplicities(b, sw, g.entries[*i].n_prime), "L+:K+ + L-:K+");
  EXPECT_TRUE(g.entries[*i].dim_b.equals(Scalar(6), 1e-12));
  EXPECT_TRUE(g.entries[*i].d_inv.equals(Scalar(2), 1e-12));
}

TEST(Correspondence, DotOutput) {
  auto b = build({Family::ToricCode, 1, std::nullopt});
  auto sw = schur_weyl(b);
  auto g = verify_correspondence(b, sw);
  auto dot = galois_dot(b, sw, g);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("{1} (1) \xE2\x86\x94 1 + e (2)"), std::string::npos) << dot;
  EXPECT_NE(dot.find("n0 -> n1"), std::string::npos);
}

TEST(GroupQuotient, Orbifold) {
  auto b = build({Family::VLplusOrbifold, 1, std::nullopt});
  auto q = group_quotient(b, schur_weyl(b));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->name, "Z2");
}

TEST(GroupQuotient, ToricCode) {
  auto b = build({Family::ToricCode, 1, std::nullopt});
  auto q = group_quotient(b, schur_weyl(b));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->name, "Z2");
}

TEST(GroupQuotient, A2nHasNoGroupBasis) {
  auto b = build({Family::A2n, 1, std::nullopt});
  EXPECT_FALSE(group_quotient(b, schur_weyl(b)).has_value());
  EXPECT_EQ(pointed_subgroup(b.module_ring).name, "D6");
}

TEST(GroupName, SmallGroups) {
  EXPECT_EQ(pointed_subgroup(dihedral_ring(4)).name, "D8");
  EXPECT_EQ(pointed_subgroup(dihedral_ring(2)).name, "Z2^2");
  EXPECT_EQ(pointed_subgroup(dihedral_ring(1)).name, "Z2");
  EXPECT_EQ(pointed_subgroup(tambara_yamagami(5)).name, "Z5");
}
