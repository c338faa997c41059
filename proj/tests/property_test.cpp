#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fuscond/examples.h"
#include "fuscond/galois.h"
#include "fuscond/io.h"
#include "oracles/group_catalog.h"

using namespace fuscond;

namespace {

std::vector<CondensationBundle> builtin_bundles() {
  std::vector<CondensationBundle> out;
  out.push_back(build({Family::ToricCode, 1, std::nullopt}));
  out.push_back(build({Family::IsingSquare, 1, std::nullopt}));
  out.push_back(build({Family::VLplusOrbifold, 1, std::nullopt}));
  out.push_back(build({Family::CosetDiagonal, 1, toric_code()}));
  for (int n = 1; n <= 2; ++n) {
    out.push_back(build({Family::A2n, n, std::nullopt}));
    out.push_back(build({Family::A2nPlus1, n, std::nullopt}));
  }
  return out;
}

oracle::Table relabel(const oracle::Table& t, const std::vector<std::size_t>& perm) {
  // perm[old] = new, identity fixed
  const std::size_t n = t.size();
  oracle::Table out(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[perm[i]][perm[j]] = perm[t[i][j]];
  return out;
}

}  // namespace

TEST(Property, RelabelledGroupRings) {
  std::mt19937_64 rng(2024);
  for (const auto& g : oracle::catalog()) {
    if (g.table.size() > 12) continue;
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::size_t> perm(g.table.size());
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin() + 1, perm.end(), rng);
      BasedRing r = group_ring(relabel(g.table, perm));
      EXPECT_TRUE(validate(r).ok()) << g.name;
      auto p = central_idempotents(AssocAlgebra::from_ring(r));
      std::vector<long long> m;
      for (const auto& b : p.blocks) m.push_back(b.m);
      std::sort(m.begin(), m.end());
      EXPECT_EQ(m, g.degrees) << g.name;
      EXPECT_EQ(enumerate_subrings(r, Subring({0})).size(),
                enumerate_subrings(group_ring(g.table), Subring({0})).size())
          << g.name;
    }
  }
}

TEST(Property, SubringGenerationIsClosureOperator) {
  std::mt19937_64 rng(7);
  for (const auto& b : builtin_bundles()) {
    const auto& r = b.module_ring;
    std::uniform_int_distribution<std::size_t> pick(0, r.rank() - 1);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::size_t> seeds{pick(rng), pick(rng)};
      Subring s = subring_generated(r, seeds);
      EXPECT_TRUE(is_subring(r, s));
      EXPECT_EQ(subring_generated(r, s.members), s) << b.name;  // idempotent
      for (auto x : seeds) EXPECT_TRUE(s.contains(x));           // extensive
      std::vector<std::size_t> more = seeds;
      more.push_back(pick(rng));
      EXPECT_TRUE(s.is_subset_of(subring_generated(r, more))) << b.name;  // monotone
    }
  }
}

TEST(Property, JsonRoundTrip) {
  for (const auto& b : builtin_bundles()) {
    const std::string text = dump_canonical(bundle_to_json(b));
    EXPECT_EQ(dump_canonical(bundle_to_json(bundle_from_json(Json::parse(text)))), text) << b.name;
  }
  for (const auto& md : {toric_code(), ising(), a2n_side(2, true)}) {
    const std::string text = dump_canonical(mtc_to_json(md));
    EXPECT_EQ(dump_canonical(mtc_to_json(mtc_from_json(Json::parse(text)))), text);
  }
}

TEST(Property, OrderReversalAndAbsorption) {
  for (const auto& b : builtin_bundles()) {
    auto sw = schur_weyl(b);
    auto g = verify_correspondence(b, sw);
    EXPECT_TRUE(g.order_reversing) << b.name;
    EXPECT_TRUE(g.ok()) << b.name << "\n" << g.checks.to_markdown();
    for (const auto& e : g.entries) {
      Element eb = e_sub(b, e.sub);
      EXPECT_LT(to_double(max_abs(multiply(b.module_ring, eb, sw.e_local) - eb)), 1e-9) << b.name;
    }
  }
}

TEST(Property, LocalIndicators) {
  for (const auto& b : builtin_bundles()) {
    auto sw = schur_weyl(b);
    for (std::size_t k = 0; k < sw.blocks.size(); ++k) {
      for (auto y : b.local.members) {
        const Complex v = sw.characters[k][y];
        EXPECT_NEAR(to_double(v.real()), sw.blocks[k].m * to_double(b.dA[y].real_part()), 1e-9) << b.name;
        EXPECT_NEAR(to_double(v.imag()), 0.0, 1e-9);
      }
    }
  }
}

TEST(Property, CharacterRowZeroIsFrobeniusPerron) {
  for (const auto& md : {toric_code(), ising(), a2n_side(1, false), a2n_side(3, true)}) {
    auto chi = characters(md);
    auto fp = fp_dims(md.fusion_ring());
    for (std::size_t y = 0; y < md.rank(); ++y) {
      EXPECT_NEAR(to_double(abs(chi[0][y].to_complex() - fp[y].to_complex())), 0.0, 1e-9);
    }
  }
}

TEST(Property, SeedDoesNotChangeResults) {
  auto b = build({Family::A2n, 2, std::nullopt});
  const auto saved = settings().seed;
  auto a = schur_weyl(b);
  settings().seed = 424242;
  auto c = schur_weyl(b);
  settings().seed = saved;
  EXPECT_EQ(a.block_m, c.block_m);
  for (std::size_t k = 0; k < a.matches.size(); ++k) EXPECT_EQ(a.matches[k].x, c.matches[k].x);
}
