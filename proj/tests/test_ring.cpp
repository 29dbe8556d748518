#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace fibered;

namespace {

int find_orbit(const SubcharacterTable& t, int subgroup_order, bool trivial) {
  for (int o = 0; o < t.orbit_count(); ++o)
    if (t.orbit_subgroup_order(o) == subgroup_order && t.orbit_is_trivial(o) == trivial) return o;
  return -1;
}

}  // namespace

TEST(Ring, C2WithSignFiber) {
  const auto t = build_table(catalog::group("C2"), FiberGroup({2}));
  ASSERT_EQ(t.orbit_count(), 3);
  const int one = find_orbit(t, 1, true), triv = find_orbit(t, 2, true), sign = find_orbit(t, 2, false);
  const auto b = [&](int o) { return RingElement::basis(t, o); };
  EXPECT_EQ(multiply(b(sign), b(sign)), b(triv));
  EXPECT_EQ(multiply(b(one), b(sign)), b(one));
  EXPECT_EQ(multiply(b(one), b(one)), b(one).scaled(2));
  EXPECT_EQ(multiply(b(triv), b(sign)), b(sign));
  EXPECT_EQ(RingElement::one(t), b(triv));

  const auto m = mark_table(t);
  std::vector<Coefficient> diag;
  for (int i = 0; i < m.size(); ++i) diag.push_back(m.at(i, i));
  std::sort(diag.begin(), diag.end());
  EXPECT_EQ(diag, (std::vector<Coefficient>{1, 1, 2}));
}

TEST(Ring, ClassicalTableOfMarksOfS3) {
  const auto t = build_table(catalog::group("S3"), FiberGroup({1}));
  const auto m = mark_table(t);
  ASSERT_EQ(m.size(), 4);
  const std::vector<Coefficient> expected = {1, 0, 0, 0,   // S3
                                             1, 2, 0, 0,   // C3
                                             1, 0, 1, 0,   // C2
                                             1, 2, 3, 6};  // 1
  EXPECT_EQ(m.matrix, expected);
}

TEST(Ring, MuAndGammaMatchDoubleCosetOracles) {
  for (const char* gname : {"S3", "C2xC2", "D8", "Q8", "A4"})
    for (const char* fname : {"C2", "C3"}) {
      const auto t = build_table(catalog::group(gname), parse_fiber(fname, 1));
      const auto& g = t.group();
      const int n = t.orbit_count();
      std::vector<oracle::Sub> reps;
      for (int o = 0; o < n; ++o) reps.push_back(oracle::from_item(t, t.orbit_rep(o)));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          EXPECT_EQ(gamma_items(t, t.orbit_rep(a), t.orbit_rep(b)), oracle::gamma(g, reps[a], reps[b]));
          for (int c = 0; c < n; ++c)
            EXPECT_EQ(mu(t, a, b, c), oracle::mu(g, t.fiber(), reps[a], reps[b], reps[c]))
                << gname << " " << fname << " " << a << " " << b << " " << c;
        }
    }
}

TEST(Ring, GammaViaMuAndStructureConstants) {
  const auto t = build_table(catalog::group("D12"), FiberGroup({6}));
  const StructureConstants sc(t);
  for (int a = 0; a < t.item_count(); a += 3)
    for (int b = 0; b < t.item_count(); b += 5) EXPECT_EQ(gamma_items(t, a, b), gamma_via_mu(t, a, b));
  for (int a = 0; a < t.orbit_count(); ++a)
    for (int b = 0; b < t.orbit_count(); ++b)
      for (int c = 0; c < t.orbit_count(); ++c) EXPECT_EQ(sc(a, b, c), mu(t, a, b, c));
}

TEST(Ring, TrivialTorsionGivesClassicalRank) {
  for (const char* gname : {"C4", "S3", "D8", "A4"}) {
    const auto g = catalog::group(gname);
    const auto t = build_table(g, FiberGroup({5}));
    EXPECT_TRUE(trivial_torsion(t.fiber(), g.order()));
    EXPECT_EQ(t.orbit_count(), static_cast<int>(t.subgroups().classes().size())) << gname;
  }
  EXPECT_FALSE(trivial_torsion(FiberGroup({6}), 4));
}

TEST(Ring, MarkTableIsLowerTriangular) {
  const auto t = build_table(catalog::group("A4"), FiberGroup({6}));
  const auto m = mark_table(t);
  for (int i = 0; i < m.size(); ++i) {
    EXPECT_GT(m.at(i, i), 0);
    for (int j = i + 1; j < m.size(); ++j) EXPECT_EQ(m.at(i, j), 0);
  }
  EXPECT_TRUE(burnside_subring_check(t));
}

TEST(Ring, CheckedArithmetic) {
  EXPECT_EQ(detail::checked_add(2, 3), 5);
  EXPECT_EQ(detail::checked_mul(-4, 3), -12);
  EXPECT_THROW(detail::checked_add(std::numeric_limits<Coefficient>::max(), 1), ConsistencyError);
  EXPECT_THROW(detail::checked_mul(std::numeric_limits<Coefficient>::max(), 2), ConsistencyError);
}
