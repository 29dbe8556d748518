#include <gtest/gtest.h>

#include "fibered/fibered.hpp"

using namespace fibered;

namespace {

FiniteGroup s3_alt() {
  GroupSpec spec;
  spec.name = "S3alt";
  spec.perm_gens = {{2, 1, 3}, {1, 3, 2}};
  return build_group(spec);
}

FiniteGroup d8_as_cayley() {
  const auto d8 = catalog::group("D8");
  GroupSpec spec;
  spec.name = "D8cayley";
  // reverse the element order so the table differs from the catalog one
  const int n = d8.order();
  spec.cayley.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) spec.cayley[n - 1 - x][n - 1 - y] = n - 1 - d8.mul(x, y);
  return build_group(spec);
}

}  // namespace

TEST(Species, NegativeCases) {
  {
    const BurnsideRing g(catalog::group("C4"), FiberGroup({2}));
    const BurnsideRing h(catalog::group("C2xC2"), FiberGroup({2}));
    EXPECT_FALSE(find_species_iso(g, h).has_value());
  }
  {
    const BurnsideRing g(catalog::group("C6"), FiberGroup({1}));
    const BurnsideRing h(catalog::group("S3"), FiberGroup({1}));
    EXPECT_FALSE(find_species_iso(g, h).has_value());
  }
  {
    const BurnsideRing g(catalog::group("D8"), FiberGroup({4}));
    const BurnsideRing h(catalog::group("Q8"), FiberGroup({4}));
    EXPECT_FALSE(find_species_iso(g, h).has_value());
  }
}

TEST(Species, IdentityIsValid) {
  const BurnsideRing r(catalog::group("A4"), FiberGroup({6}));
  const auto m = identity_map(r);
  EXPECT_TRUE(verify_condition_2(m));
  const auto b = identity_bijection(r);
  EXPECT_TRUE(verify_condition_3(b));
  EXPECT_TRUE(verify_condition_4(b));
}

TEST(Species, PositiveCasesLiftAndVerify) {
  struct Pair { FiniteGroup g, h; };
  std::vector<Pair> pairs;
  pairs.push_back({catalog::group("S3"), s3_alt()});
  pairs.push_back({catalog::group("D8"), d8_as_cayley()});
  for (const auto& p : pairs) {
    const auto a = parse_fiber("auto", std::lcm(p.g.exponent(), p.h.exponent()));
    const BurnsideRing g(p.g, a), h(p.h, a);
    SearchStats stats;
    const auto m = find_species_iso(g, h, &stats);
    ASSERT_TRUE(m.has_value()) << p.h.name();
    EXPECT_GT(stats.nodes, 0u);
    EXPECT_TRUE(verify_condition_2(*m));
    EXPECT_TRUE(mark_matrices_equal(*m));
    const auto b = lift_to_subchar_bijection(*m);
    EXPECT_TRUE(verify_condition_3(b));
    EXPECT_TRUE(verify_condition_4(b));
    const auto iso = build_ghost_iso(b);
    EXPECT_TRUE(diagram_commutes(*m, iso));
    EXPECT_TRUE(ghost_iso_is_multiplicative(iso, g, h));
    const auto report = check_found_iso_properties(*m, b);
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed || !c.asserted) << c.name;
    EXPECT_TRUE(report.ok());
  }
}

TEST(Species, AllIsosAreDistinctAndValid) {
  const BurnsideRing g(catalog::group("C2xC2"), FiberGroup({2}));
  const BurnsideRing h(catalog::group("C2xC2"), FiberGroup({2}));
  const auto maps = find_species_isos(g, h, SearchOptions{true, 0});
  ASSERT_FALSE(maps.empty());
  std::set<std::vector<int>> seen;
  for (const auto& m : maps) {
    EXPECT_TRUE(verify_condition_2(m));
    EXPECT_TRUE(seen.insert(m.orbit_map).second);
  }
  const auto limited = find_species_isos(g, h, SearchOptions{true, 1});
  EXPECT_EQ(limited.size(), 1u);
  EXPECT_EQ(limited.front(), maps.front());
}

TEST(Species, FirstMapIsLexicographicallySmallest) {
  const BurnsideRing g(catalog::group("D8"), FiberGroup({2}));
  const BurnsideRing h(catalog::group("D8"), FiberGroup({2}));
  const auto all = find_species_isos(g, h, SearchOptions{true, 0});
  const auto first = find_species_iso(g, h);
  ASSERT_TRUE(first.has_value());
  auto smallest = std::min_element(all.begin(), all.end(),
                                   [](const SpeciesMap& x, const SpeciesMap& y) { return x.orbit_map < y.orbit_map; });
  EXPECT_EQ(first->orbit_map, smallest->orbit_map);
}

TEST(Species, EquivalenceScanIsConsistent) {
  for (const char* gname : {"C1", "C2", "C3", "C4", "C2xC2", "S3"})
    for (const char* fname : {"C1", "C2", "C3"}) {
      const BurnsideRing g(catalog::group(gname), parse_fiber(fname, 1));
      if (g.table().orbit_count() > 6) continue;
      const BurnsideRing h(catalog::group(gname), parse_fiber(fname, 1));
      const auto scan = scan_all_bijections(g, h);
      EXPECT_TRUE(scan.consistent()) << gname << " " << fname;
      EXPECT_GT(scan.pass_2, 0u);
    }
}

TEST(Species, FingerprintsAreInvariant) {
  const BurnsideRing g(catalog::group("S3"), FiberGroup({6}));
  const BurnsideRing h(s3_alt(), FiberGroup({6}));
  auto fg = fingerprints(g), fh = fingerprints(h);
  std::sort(fg.begin(), fg.end());
  std::sort(fh.begin(), fh.end());
  EXPECT_EQ(fg, fh);
}

TEST(Species, BrokenMapFailsCondition2) {
  const BurnsideRing r(catalog::group("S3"), FiberGroup({2}));
  auto m = identity_map(r);
  std::swap(m.orbit_map[0], m.orbit_map[1]);
  EXPECT_FALSE(verify_condition_2(m));
}
