#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ghost.hpp"

namespace fibered {

/// Tally of one family of identities.
struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;

  void record(bool ok) {
    ++checks;
    if (!ok) ++failures;
  }
  bool passed() const { return failures == 0; }
};

using SuiteReport = std::vector<SuiteResult>;

inline bool all_passed(const SuiteReport& r) {
  for (const auto& s : r)
    if (!s.passed()) return false;
  return true;
}

namespace detail {

inline Element random_element(const FiniteGroup& g, std::mt19937_64& rng) {
  return static_cast<Element>(std::uniform_int_distribution<int>(0, g.order() - 1)(rng));
}

inline int random_index(int n, std::mt19937_64& rng) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

}  // namespace detail

/// Properties of the multiplication coefficients: conjugation invariance, symmetry,
/// nonvanishing exactly on realized terms, and the trivial-character criterion.
inline SuiteReport mu_lemma_suite(const BurnsideRing& r, std::uint64_t seed = 1, int samples = 100) {
  const auto& t = r.table();
  const auto& g = t.group();
  const auto& mu = r.mu();
  const int n = t.orbit_count();
  std::mt19937_64 rng(seed);
  SuiteResult part1{"mu: conjugation invariance"}, part2{"mu: symmetry"}, part3{"mu: nonzero iff realized"},
      part4{"mu: trivial-character criterion"};

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) part1.record(mu_items(t, t.orbit_rep(a), t.orbit_rep(b), t.orbit_rep(c)) == mu(a, b, c));
  for (int s = 0; s < samples; ++s) {
    int a = detail::random_index(n, rng), b = detail::random_index(n, rng), c = detail::random_index(n, rng);
    Element x = detail::random_element(g, rng), y = detail::random_element(g, rng), z = detail::random_element(g, rng);
    part1.record(mu_items(t, t.conjugate_item(x, t.orbit_rep(a)), t.conjugate_item(y, t.orbit_rep(b)),
                          t.conjugate_item(z, t.orbit_rep(c))) == mu(a, b, c));
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) part2.record(mu(a, b, c) == mu(b, a, c));
      std::vector<bool> realized(n, false);
      for (Element x = 0; x < g.order(); ++x) realized[t.orbit_of(t.product_with_conjugate(t.orbit_rep(a), x, t.orbit_rep(b)))] = true;
      for (int c = 0; c < n; ++c) part3.record((mu(a, b, c) != 0) == realized[c]);
    }
  for (int s = 0; s < samples; ++s) {
    int a = detail::random_index(n, rng), b = detail::random_index(n, rng), c = detail::random_index(n, rng);
    Element x = detail::random_element(g, rng), y = detail::random_element(g, rng);
    int ia = t.conjugate_item(x, t.orbit_rep(a)), ib = t.conjugate_item(y, t.orbit_rep(b));
    part2.record(mu_items(t, ia, ib, t.orbit_rep(c)) == mu_items(t, ib, ia, t.orbit_rep(c)));
  }

  for (int o = 0; o < n; ++o) {
    const int rep = t.orbit_rep(o);
    const int k = t.item_subgroup(rep);
    bool every = true;
    for (int z = t.first_item(k); z < t.first_item(k + 1); ++z) every &= mu_items(t, rep, z, z) != 0;
    part4.record(every == t.is_trivial_item(rep));
  }
  return {part1, part2, part3, part4};
}

/// Properties of the marks: invariance, support on the orbit poset, diagonal, fixed points,
/// and the expression through multiplication coefficients.
inline SuiteReport marks_lemma_suite(const BurnsideRing& r, std::uint64_t seed = 2, int samples = 100) {
  const auto& t = r.table();
  const auto& g = t.group();
  const auto& subs = t.subgroups();
  const int n = t.orbit_count();
  std::mt19937_64 rng(seed);
  SuiteResult part1{"gamma: conjugation invariance"}, part2{"gamma: nonzero iff below"}, part3{"gamma: diagonal index"},
      part4{"gamma: fixed points"}, part5{"gamma: via mu"}, direct{"gamma: table scan equals direct scan"},
      poset{"orbit poset: stored relation equals existential test"};

  for (int s = 0; s < samples; ++s) {
    int a = detail::random_index(n, rng), b = detail::random_index(n, rng);
    Element x = detail::random_element(g, rng), y = detail::random_element(g, rng);
    int ia = t.conjugate_item(x, t.orbit_rep(a)), ib = t.conjugate_item(y, t.orbit_rep(b));
    part1.record(gamma_items(t, ia, ib) == r.gamma(a, b));
    part5.record(gamma_via_mu(t, ia, ib) == r.gamma(a, b));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ia = t.orbit_rep(a), ib = t.orbit_rep(b);
      const Coefficient gam = r.gamma(a, b);
      part2.record((gam != 0) == orbit_leq(t, a, b));
      poset.record(t.leq(a, b) == orbit_leq(t, a, b));
      part5.record(gamma_via_mu(t, ia, ib) == gam);
      direct.record(gamma(g, t.item(ia), t.item(ib)) == gam);
    }
  for (int a = 0; a < n; ++a) {
    const auto& s = t.item(t.orbit_rep(a));
    part3.record(r.gamma(a, a) == stabilizer(g, s).order / s.subgroup.order);
  }
  for (int k = 0; k < subs.size(); ++k)
    for (int l = 0; l < subs.size(); ++l)
      part4.record(gamma_items(t, t.trivial_item(k), t.trivial_item(l)) == fixed_points_count(g, subs.at(k), subs.at(l)));
  return {part1, part2, part3, part4, part5, direct, poset};
}

/// Commutativity, associativity, unit, the [1,1] ideal, and closure of the Burnside subring.
inline SuiteReport ring_axiom_suite(const BurnsideRing& r) {
  const auto& t = r.table();
  const auto& mu = r.mu();
  const int n = t.orbit_count();
  SuiteResult comm{"ring: commutativity"}, assoc{"ring: associativity"}, unit{"ring: [G,1] is the identity"},
      ideal{"ring: [L,psi].[1,1] = [G:L][1,1]"}, sub{"ring: Burnside subring closure"},
      rank{"ring: rank equals subgroup classes under trivial torsion"};
  const int bottom = t.bottom_orbit();
  for (int a = 0; a < n; ++a) {
    auto x = RingElement::basis(t, a);
    unit.record(multiply(x, RingElement::one(t)) == x && multiply(RingElement::one(t), x) == x);
    auto expected = RingElement::basis(t, bottom).scaled(t.group().order() / t.orbit_subgroup_order(a));
    ideal.record(multiply(x, RingElement::basis(t, bottom)) == expected);
    for (int b = 0; b < n; ++b) {
      comm.record(mu.row(a, b) == mu.row(b, a));
      for (int c = 0; c < n; ++c) {
        // ([a][b])[c] and [a]([b][c]) expanded through the structure constants
        std::vector<Coefficient> left(n, 0), right(n, 0);
        for (auto [p, m1] : mu.row(a, b))
          for (auto [q, m2] : mu.row(p, c)) left[q] += m1 * m2;
        for (auto [p, m1] : mu.row(b, c))
          for (auto [q, m2] : mu.row(a, p)) right[q] += m1 * m2;
        assoc.record(left == right);
      }
    }
  }
  sub.record(burnside_subring_check(t));
  if (trivial_torsion(t.fiber(), t.group().order()))
    rank.record(n == static_cast<int>(t.subgroups().classes().size()));
  return {comm, assoc, unit, ideal, sub, rank};
}

/// Mark morphism identities: multiplicativity, invariance, injectivity, the coefficient
/// identity relating marks and multiplication coefficients, and mu recovered from marks.
inline SuiteReport ghost_suite(const BurnsideRing& r) {
  const auto& t = r.table();
  const auto& marks = r.item_marks();
  const auto& mu = r.mu();
  const int n = t.orbit_count();
  SuiteResult hom{"ghost: Phi(xy) = Phi(x)Phi(y)"}, inv{"ghost: Phi images G-invariant"},
      inj{"ghost: mark matrix triangular, diagonal [N:K]"}, coeff{"ghost: coefficient identity"},
      recover{"ghost: mu recovered from marks"}, basis{"ghost: basis elements distinct per orbit"};

  std::vector<GhostElement> images;
  for (int a = 0; a < n; ++a) {
    images.push_back(mark_morphism(RingElement::basis(t, a), marks));
    inv.record(is_g_invariant(images.back()));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto prod = multiply(RingElement::basis(t, a), RingElement::basis(t, b));
      hom.record(mark_morphism(prod, marks) == ghost_multiply(images[a], images[b]));
    }

  const auto& mt = r.marks();
  bool tri = verify_injectivity(mt);
  for (int i = 0; i < mt.size(); ++i) {
    const int o = mt.order[i];
    tri &= mt.at(i, i) == t.stabilizer_order(o) / t.orbit_subgroup_order(o);
  }
  inj.record(tri);

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int u = 0; u < t.item_count(); ++u) {
        Coefficient rhs = 0;
        for (auto [c, m] : mu.row(a, b))
          if (t.leq(t.orbit_of(u), c)) rhs += m * marks(u, c);
        coeff.record(alpha(t, marks, a, b, u) == rhs);
      }
      try {
        MuFromMarks derived(t, marks, a, b);
        for (int c = 0; c < n; ++c) recover.record(derived.mu(c) == mu(a, b, c));
      } catch (const ConsistencyError&) {
        recover.record(false);
      }
    }

  std::vector<std::vector<Coefficient>> seen;
  for (int o = 0; o < n; ++o) {
    auto u = ghost_basis(t, o);
    bool indicator = true;
    for (int i = 0; i < t.item_count(); ++i) indicator &= u.entries[i] == (t.orbit_of(i) == o ? 1 : 0);
    basis.record(indicator && std::find(seen.begin(), seen.end(), u.entries) == seen.end());
    seen.push_back(u.entries);
  }
  return {hom, inv, inj, coeff, recover, basis};
}

/// Orbit-stabilizer and the containments K <= N_G(K,phi) <= N_G(K) for every item.
inline SuiteReport construction_suite(const BurnsideRing& r) {
  const auto& t = r.table();
  const auto& subs = t.subgroups();
  SuiteResult os{"table: orbit size x stabilizer order = |G|"}, chain{"table: K <= N_G(K,phi) <= N_G(K)"},
      count{"table: items = sum of |Hom(K,A)|"};
  for (int o = 0; o < t.orbit_count(); ++o) {
    const auto stab = t.item_stabilizer(t.orbit_rep(o));
    os.record(t.orbit_size(o) * stab.order == t.group().order() && stab.order == t.stabilizer_order(o));
  }
  std::size_t total = 0;
  for (int i = 0; i < t.item_count(); ++i) {
    const auto stab = t.item_stabilizer(i);
    const auto& k = t.item(i).subgroup;
    chain.record(k.members.subset_of(stab.members) && stab.members.subset_of(subs.normalizer(t.item_subgroup(i)).members));
  }
  for (int s = 0; s < subs.size(); ++s) total += hom_set(t.group(), subs.at(s), t.fiber()).size();
  count.record(total == static_cast<std::size_t>(t.item_count()));
  return {os, chain, count};
}

inline SuiteReport verify_all(const BurnsideRing& r, std::uint64_t seed = 1) {
  SuiteReport out;
  for (auto&& part : {construction_suite(r), mu_lemma_suite(r, seed), marks_lemma_suite(r, seed + 1), ring_axiom_suite(r)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace fibered
