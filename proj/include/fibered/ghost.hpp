#pragma once

#include <vector>

#include "ring.hpp"

namespace fibered {

/// Marks gamma(item, rep of orbit) for every item and every orbit.
class ItemMarks {
 public:
  explicit ItemMarks(const SubcharacterTable& t) : orbits_(t.orbit_count()) {
    values_.resize(static_cast<std::size_t>(t.item_count()) * orbits_);
    for (int i = 0; i < t.item_count(); ++i)
      for (int o = 0; o < orbits_; ++o) values_[static_cast<std::size_t>(i) * orbits_ + o] = gamma_items(t, i, t.orbit_rep(o));
  }

  Coefficient operator()(int item, int orbit) const { return values_[static_cast<std::size_t>(item) * orbits_ + orbit]; }

 private:
  int orbits_;
  std::vector<Coefficient> values_;
};

/// Element of prod_K Z Hom(K,A): one integer per subcharacter, grouped by subgroup.
struct GhostElement {
  const SubcharacterTable* table = nullptr;
  std::vector<Coefficient> entries;

  static GhostElement zero(const SubcharacterTable& t) { return GhostElement{&t, std::vector<Coefficient>(t.item_count(), 0)}; }

  /// Trivial character with coefficient 1 in every entry.
  static GhostElement one(const SubcharacterTable& t) {
    GhostElement u = zero(t);
    for (int s = 0; s < t.subgroups().size(); ++s) u.entries[t.trivial_item(s)] = 1;
    return u;
  }

  Coefficient operator[](int item) const { return entries[item]; }
  bool operator==(const GhostElement& o) const { return entries == o.entries; }
};

inline bool is_g_invariant(const GhostElement& u) {
  const auto& t = *u.table;
  for (Element g = 0; g < t.group().order(); ++g)
    for (int i = 0; i < t.item_count(); ++i)
      if (u.entries[t.conjugate_item(g, i)] != u.entries[i]) return false;
  return true;
}

/// K-th entry of Phi([L,psi]) is sum_phi gamma((K,phi),(L,psi)) phi, extended linearly.
inline GhostElement mark_morphism(const RingElement& x, const ItemMarks& marks) {
  const auto& t = *x.table;
  GhostElement u = GhostElement::zero(t);
  for (auto [o, c] : x.coeffs)
    for (int i = 0; i < t.item_count(); ++i) u.entries[i] = detail::checked_add(u.entries[i], detail::checked_mul(c, marks(i, o)));
  return u;
}

inline GhostElement mark_morphism(const RingElement& x) { return mark_morphism(x, ItemMarks(*x.table)); }

/// The ghost basis element attached to an orbit: at L = ^gK its entry is the sum of
/// ^{gn} phi over n in [N_G(K) / N_G(K,phi)], and it vanishes off the class of K.
inline GhostElement ghost_basis(const SubcharacterTable& t, int orbit) {
  const auto& g = t.group();
  const auto& subs = t.subgroups();
  const int rep = t.orbit_rep(orbit);
  const int k = t.item_subgroup(rep);
  const auto transversal = left_coset_reps_in(g, subs.normalizer(k), t.item_stabilizer(rep));
  GhostElement u = GhostElement::zero(t);
  for (int l : subs.classes()[subs.class_of(k)]) {
    Element conj_by = -1;
    for (Element x = 0; x < g.order() && conj_by < 0; ++x)
      if (subs.conjugate(x, k) == l) conj_by = x;
    for (Element n : transversal) u.entries[t.conjugate_item(g.mul(conj_by, n), rep)] += 1;
  }
  return u;
}

/// Entrywise product; each entry multiplies in the group ring Z Hom(K,A).
inline GhostElement ghost_multiply(const GhostElement& u, const GhostElement& v) {
  if (u.table != v.table) throw InputError("ghost elements from different tables");
  const auto& t = *u.table;
  GhostElement r = GhostElement::zero(t);
  for (int s = 0; s < t.subgroups().size(); ++s) {
    const int begin = t.first_item(s), end = t.first_item(s + 1);
    for (int i = begin; i < end; ++i) {
      if (u.entries[i] == 0) continue;
      for (int j = begin; j < end; ++j) {
        if (v.entries[j] == 0) continue;
        int p = t.product_item(i, j);
        r.entries[p] = detail::checked_add(r.entries[p], detail::checked_mul(u.entries[i], v.entries[j]));
      }
    }
  }
  return r;
}

/// Coordinates of a G-invariant element in the ghost basis (one per orbit).
inline std::vector<Coefficient> ghost_coordinates(const GhostElement& u) {
  const auto& t = *u.table;
  if (!is_g_invariant(u)) throw InputError("ghost element is not G-invariant");
  std::vector<Coefficient> c(t.orbit_count());
  for (int o = 0; o < t.orbit_count(); ++o) c[o] = u.entries[t.orbit_rep(o)];
  return c;
}

/// sum over lambda in Hom(U,A) of gamma((U, omega lambda^-1),(K,phi)) gamma((U,lambda),(L,psi)).
inline Coefficient alpha(const SubcharacterTable& t, const ItemMarks& marks, int o_k, int o_l, int u) {
  const int s = t.item_subgroup(u);
  Coefficient sum = 0;
  for (int lambda = t.first_item(s); lambda < t.first_item(s + 1); ++lambda) {
    int shifted = t.product_item(u, t.inverse_item(lambda));
    sum = detail::checked_add(sum, detail::checked_mul(marks(shifted, o_k), marks(lambda, o_l)));
  }
  return sum;
}

/// Multiplication coefficients of [K,phi].[L,psi] recovered from marks alone.
///
/// Orbits are processed by descending subgroup order, so every orbit strictly above
/// the current one is already known when its correction term is summed.
class MuFromMarks {
 public:
  MuFromMarks(const SubcharacterTable& t, const ItemMarks& marks, int o_k, int o_l)
      : mu_(t.orbit_count(), 0), beta_(t.orbit_count(), 0) {
    for (int o : mark_order(t)) {
      const int u = t.orbit_rep(o);
      Coefficient b = 0;
      for (int above = 0; above < t.orbit_count(); ++above)
        if (above != o && t.leq(o, above) && mu_[above] != 0)
          b = detail::checked_add(b, detail::checked_mul(mu_[above], marks(u, above)));
      beta_[o] = b;
      const Coefficient diff = alpha(t, marks, o_k, o_l, u) - b;
      const Coefficient index = t.stabilizer_order(o) / t.orbit_subgroup_order(o);
      if (diff % index != 0) throw ConsistencyError("alpha - beta not divisible by [N_G(U,w):U]");
      mu_[o] = diff / index;
      if (mu_[o] < 0) throw ConsistencyError("negative multiplication coefficient from marks");
    }
  }

  Coefficient mu(int orbit) const { return mu_[orbit]; }
  Coefficient beta(int orbit) const { return beta_[orbit]; }
  const std::vector<Coefficient>& row() const { return mu_; }

 private:
  std::vector<Coefficient> mu_;
  std::vector<Coefficient> beta_;
};

/// sum over orbits strictly above [U,omega] of mu . gamma, with mu taken from marks.
inline Coefficient beta(const SubcharacterTable& t, const ItemMarks& marks, int o_k, int o_l, int u) {
  return MuFromMarks(t, marks, o_k, o_l).beta(t.orbit_of(u));
}

inline Coefficient mu_via_marks(const SubcharacterTable& t, const ItemMarks& marks, int o_k, int o_l, int u) {
  return MuFromMarks(t, marks, o_k, o_l).mu(t.orbit_of(u));
}

/// Mark matrix lower triangular with nonzero diagonal, hence the mark morphism is injective.
inline bool verify_injectivity(const MarkTable& m) {
  for (int i = 0; i < m.size(); ++i) {
    if (m.at(i, i) <= 0) return false;
    for (int j = i + 1; j < m.size(); ++j)
      if (m.at(i, j) != 0) return false;
  }
  return true;
}

inline bool verify_injectivity(const SubcharacterTable& t) { return verify_injectivity(mark_table(t)); }

/// A table together with the derived data every suite and the isomorphism search reuse.
class BurnsideRing {
 public:
  BurnsideRing(FiniteGroup g, FiberGroup a)
      : table_(std::move(g), std::move(a)), marks_(mark_table(table_)), item_marks_(table_), mu_(table_) {}

  BurnsideRing(const BurnsideRing&) = delete;
  BurnsideRing& operator=(const BurnsideRing&) = delete;

  const SubcharacterTable& table() const { return table_; }
  const MarkTable& marks() const { return marks_; }
  const ItemMarks& item_marks() const { return item_marks_; }
  const StructureConstants& mu() const { return mu_; }
  /// gamma between orbit representatives.
  Coefficient gamma(int o1, int o2) const { return marks_.marks(o1, o2); }

 private:
  SubcharacterTable table_;
  MarkTable marks_;
  ItemMarks item_marks_;
  StructureConstants mu_;
};

}  // namespace fibered
