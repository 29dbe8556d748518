#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace fibered;

namespace {

int orbit_count_oracle(const FiniteGroup& g, const FiberGroup& a) {
  std::vector<oracle::Sub> all;
  for (auto k : oracle::all_subgroups(g))
    for (auto& h : oracle::homs(g, k, a)) all.push_back(h);
  std::vector<bool> used(all.size(), false);
  int orbits = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (used[i]) continue;
    ++orbits;
    for (std::size_t j = i; j < all.size(); ++j)
      if (!used[j] && oracle::conjugate_in_g(g, all[i], all[j])) used[j] = true;
  }
  return orbits;
}

}  // namespace

TEST(Subcharacter, OrbitCountsOfSmallCases) {
  EXPECT_EQ(build_table(catalog::group("C4"), FiberGroup({2})).orbit_count(), 5);
  EXPECT_EQ(build_table(catalog::group("S3"), FiberGroup({6})).orbit_count(), 7);
  EXPECT_EQ(build_table(catalog::group("C2xC2"), FiberGroup({2})).orbit_count(), 11);
  EXPECT_EQ(build_table(catalog::group("C4"), FiberGroup({5})).orbit_count(), 3);
  EXPECT_EQ(build_table(catalog::group("C1"), FiberGroup({6})).orbit_count(), 1);
}

TEST(Subcharacter, OrbitCountsMatchOracle) {
  for (const char* gname : {"C6", "C2xC2", "S3", "D8", "Q8", "A4"})
    for (const char* fname : {"C1", "C2", "C3", "C4"}) {
      const auto g = catalog::group(gname);
      const auto a = parse_fiber(fname, 1);
      EXPECT_EQ(build_table(g, a).orbit_count(), orbit_count_oracle(g, a)) << gname << " " << fname;
    }
}

TEST(Subcharacter, OrbitStabilizerAndCanonicalReps) {
  for (const char* gname : {"S3", "D8", "A4", "D12"}) {
    const auto t = build_table(catalog::group(gname), FiberGroup({6}));
    int covered = 0;
    for (int o = 0; o < t.orbit_count(); ++o) {
      EXPECT_EQ(t.orbit_size(o) * t.stabilizer_order(o), t.group().order());
      EXPECT_EQ(t.item_stabilizer(t.orbit_rep(o)).order, t.stabilizer_order(o));
      const auto& items = t.orbit_items(o);
      EXPECT_EQ(*std::min_element(items.begin(), items.end()), t.orbit_rep(o));
      if (o > 0) EXPECT_LT(t.orbit_rep(o - 1), t.orbit_rep(o));
      covered += static_cast<int>(items.size());
    }
    EXPECT_EQ(covered, t.item_count());
  }
}

TEST(Subcharacter, StabilizerOfNontrivialC3CharacterInS3IsC3) {
  const auto t = build_table(catalog::group("S3"), FiberGroup({3}));
  for (int i = 0; i < t.item_count(); ++i) {
    if (t.subgroup_order(i) != 3) continue;
    const int expect = t.is_trivial_item(i) ? 6 : 3;
    EXPECT_EQ(t.item_stabilizer(i).order, expect);
    EXPECT_EQ(stabilizer(t.group(), t.item(i)).order, expect);
  }
}

TEST(Subcharacter, PartialOrderExamples) {
  // C4 with fiber C2: (C2,1) <= (C4,1) and (C4,sgn); (C2,sgn) is below nothing nontrivial.
  const auto t = build_table(catalog::group("C4"), FiberGroup({2}));
  int c2_trivial = -1, c2_sign = -1, c4_trivial = -1, c4_sign = -1;
  for (int o = 0; o < t.orbit_count(); ++o) {
    if (t.orbit_subgroup_order(o) == 2) (t.orbit_is_trivial(o) ? c2_trivial : c2_sign) = o;
    if (t.orbit_subgroup_order(o) == 4) (t.orbit_is_trivial(o) ? c4_trivial : c4_sign) = o;
  }
  EXPECT_TRUE(t.leq(c2_trivial, c4_trivial));
  EXPECT_TRUE(t.leq(c2_trivial, c4_sign));
  EXPECT_FALSE(t.leq(c2_sign, c4_trivial));
  EXPECT_FALSE(t.leq(c2_sign, c4_sign));
  EXPECT_TRUE(t.leq(t.bottom_orbit(), c2_sign));
  EXPECT_FALSE(t.leq(c4_sign, c4_trivial));
}

TEST(Subcharacter, ItemOperationsAgreeWithDirectComputation) {
  const auto t = build_table(catalog::group("D8"), FiberGroup({4}));
  const auto& g = t.group();
  for (int i = 0; i < t.item_count(); ++i) {
    for (Element x = 0; x < g.order(); ++x) {
      const auto c = conjugate_subcharacter(g, x, t.item(i));
      EXPECT_EQ(t.item(t.conjugate_item(x, i)), c);
    }
    const int inv = t.inverse_item(i);
    EXPECT_EQ(t.item(inv).character, char_inverse(t.fiber(), t.item(i).character));
    for (int s : t.subgroups_below(t.item_subgroup(i))) {
      const int r = t.restrict_item(i, s);
      EXPECT_TRUE(subchar_leq(t.item(r), t.item(i)));
      EXPECT_TRUE(t.item_leq(r, i));
    }
  }
}

TEST(Subcharacter, OrbitRelationMatchesExistentialTest) {
  for (const char* gname : {"S3", "D8", "Q8", "A4"}) {
    const auto t = build_table(catalog::group(gname), FiberGroup({2}));
    for (int a = 0; a < t.orbit_count(); ++a)
      for (int b = 0; b < t.orbit_count(); ++b) {
        bool brute = false;
        for (int i : t.orbit_items(a))
          for (int j : t.orbit_items(b)) brute |= subchar_leq(t.item(i), t.item(j));
        EXPECT_EQ(t.leq(a, b), brute);
        EXPECT_EQ(orbit_leq(t, a, b), brute);
      }
  }
}

TEST(Subcharacter, FiberOrderCapIsEnforced) {
  EXPECT_THROW(FiberGroup({1 << 13, 1 << 13}), SizeLimitError);
}

TEST(Subcharacter, OrbitPosetIsAntisymmetricAndMonotone) {
  for (const auto& name : catalog::names()) {
    const auto t = build_table(catalog::group(name), FiberGroup({2}));
    for (int a = 0; a < t.orbit_count(); ++a) {
      EXPECT_TRUE(t.leq(a, a));
      EXPECT_TRUE(t.leq(t.bottom_orbit(), a));
      for (int b = 0; b < t.orbit_count(); ++b) {
        if (a != b) EXPECT_FALSE(t.leq(a, b) && t.leq(b, a)) << name;
        if (t.leq(a, b)) EXPECT_LE(t.orbit_subgroup_order(a), t.orbit_subgroup_order(b));
      }
    }
  }
}

TEST(Subcharacter, S3TranspositionsAndThreeCyclesAreIncomparable) {
  const auto t = build_table(catalog::group("S3"), FiberGroup({1}));
  int c2 = -1, c3 = -1;
  for (int o = 0; o < t.orbit_count(); ++o) {
    if (t.orbit_subgroup_order(o) == 2) c2 = o;
    if (t.orbit_subgroup_order(o) == 3) c3 = o;
  }
  EXPECT_FALSE(orbit_leq(t, c2, c3));
  EXPECT_FALSE(orbit_leq(t, c3, c2));
}

TEST(Subcharacter, WholeGroupAndTrivialStabilizers) {
  const auto g = catalog::group("D8");
  for (const auto& c : hom_set(g, whole_group(g), FiberGroup({2})))
    EXPECT_EQ(stabilizer(g, Subcharacter{whole_group(g), c}).order, 8);
  EXPECT_EQ(stabilizer(g, Subcharacter{trivial_subgroup(), trivial_character(g, trivial_subgroup())}).order, 8);
}
