#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace fibered;

TEST(Fiber, ParseAndArithmetic) {
  const auto a = parse_fiber("C2xC4", 1);
  EXPECT_EQ(a.order(), 8);
  EXPECT_EQ(a.exponent(), 4);
  EXPECT_EQ(a.torsion_order(2), 4);
  EXPECT_EQ(a.torsion_order(8), 8);
  EXPECT_EQ(a.torsion_order(3), 1);
  const FiberElement x = a.encode({1, 3});
  EXPECT_EQ(a.add(x, x), a.encode({0, 2}));
  EXPECT_EQ(a.add(x, a.neg(x)), 0u);
  EXPECT_EQ(a.times(4, x), 0u);
  EXPECT_EQ(a.format(x), "(1,3)");
  EXPECT_EQ(parse_fiber("auto", 6), FiberGroup({6}));
  EXPECT_EQ(parse_fiber("C1", 6).order(), 1);
  for (const char* bad : {"", "C", "C0", "Cx2", "C2x", "D4", "C2*C2"}) EXPECT_THROW(parse_fiber(bad, 2), InputError) << bad;
}

TEST(Fiber, HomSetsMatchBacktrackingOracle) {
  for (const char* gname : {"C4", "C2xC2", "S3", "D8", "Q8", "A4", "C2xC6"}) {
    const auto g = catalog::group(gname);
    const auto subs = subgroups(g);
    for (const char* fname : {"C1", "C2", "C3", "C4", "C6", "C2xC2"}) {
      const auto a = parse_fiber(fname, 1);
      for (const auto& k : subs.all()) {
        std::set<std::vector<FiberElement>> got, want;
        for (const auto& c : hom_set(g, k, a)) {
          EXPECT_TRUE(is_homomorphism(g, a, c));
          got.insert(c.values);
        }
        for (const auto& c : oracle::homs(g, k.members.bits(), a)) want.insert(c.values);
        EXPECT_EQ(got, want) << gname << " " << fname;
      }
    }
  }
}

TEST(Fiber, S3IntoC6HasTwoHoms) {
  const auto g = catalog::group("S3");
  const auto homs = hom_set(g, whole_group(g), FiberGroup({6}));
  ASSERT_EQ(homs.size(), 2u);
  EXPECT_TRUE(homs.front().is_trivial());
}

TEST(Fiber, ConjugatingC3CharacterByTranspositionInverts) {
  const auto g = catalog::group("S3");
  const auto a = FiberGroup({3});
  const auto subs = subgroups(g);
  for (const auto& k : subs.all()) {
    if (k.order != 3) continue;
    Element t = -1;
    for (Element x = 0; x < g.order(); ++x)
      if (!k.contains(x)) t = x;
    for (const auto& c : hom_set(g, k, a)) EXPECT_EQ(conjugate_character(g, t, c), char_inverse(a, c));
  }
}

TEST(Fiber, ProductInverseRestrict) {
  const auto g = catalog::group("C6");
  const auto a = FiberGroup({6});
  const auto homs = hom_set(g, whole_group(g), a);
  ASSERT_EQ(homs.size(), 6u);
  for (const auto& c : homs) {
    EXPECT_TRUE(char_product(a, c, char_inverse(a, c)).is_trivial());
    for (const auto& d : homs) EXPECT_TRUE(is_homomorphism(g, a, char_product(a, c, d)));
  }
  const auto subs = subgroups(g);
  for (const auto& k : subs.all())
    for (const auto& c : homs) EXPECT_TRUE(is_homomorphism(g, a, restrict_character(c, k)));
}
