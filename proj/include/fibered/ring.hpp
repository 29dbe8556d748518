#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "subcharacter.hpp"

namespace fibered {

using Coefficient = std::int64_t;

namespace detail {

inline Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw ConsistencyError("coefficient overflow");
  return r;
}

inline Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw ConsistencyError("coefficient overflow");
  return r;
}

}  // namespace detail

/// Element of B^A(G): sparse integer combination of orbit basis elements.
struct RingElement {
  const SubcharacterTable* table = nullptr;
  std::map<int, Coefficient> coeffs;

  static RingElement basis(const SubcharacterTable& t, int orbit) { return RingElement{&t, {{orbit, 1}}}; }
  static RingElement zero(const SubcharacterTable& t) { return RingElement{&t, {}}; }
  static RingElement one(const SubcharacterTable& t) { return basis(t, t.top_orbit()); }

  Coefficient coeff(int orbit) const {
    auto it = coeffs.find(orbit);
    return it == coeffs.end() ? 0 : it->second;
  }

  void add_term(int orbit, Coefficient c) {
    if (c == 0) return;
    Coefficient& slot = coeffs[orbit];
    slot = detail::checked_add(slot, c);
    if (slot == 0) coeffs.erase(orbit);
  }

  RingElement operator+(const RingElement& o) const {
    RingElement r = *this;
    for (auto [k, v] : o.coeffs) r.add_term(k, v);
    return r;
  }

  RingElement scaled(Coefficient c) const {
    RingElement r{table, {}};
    for (auto [k, v] : coeffs) r.add_term(k, detail::checked_mul(v, c));
    return r;
  }

  bool operator==(const RingElement& o) const { return coeffs == o.coeffs; }
};

/// Items [K ∩ ^sL, phi . ^s psi] for s over [K\G/L], in representative order.
inline std::vector<int> product_terms(const SubcharacterTable& t, int a, int b) {
  const auto& g = t.group();
  std::vector<int> out;
  for (Element s : double_coset_reps(g, t.item(a).subgroup, t.item(b).subgroup))
    out.push_back(t.product_with_conjugate(a, s, b));
  return out;
}

/// [K,phi] . [L,psi] at the given items, as a ring element.
inline RingElement multiply_items(const SubcharacterTable& t, int a, int b) {
  RingElement r = RingElement::zero(t);
  for (int item : product_terms(t, a, b)) r.add_term(t.orbit_of(item), 1);
  return r;
}

inline RingElement multiply(const RingElement& x, const RingElement& y) {
  if (x.table != y.table) throw InputError("ring elements from different tables");
  const auto& t = *x.table;
  RingElement r = RingElement::zero(t);
  for (auto [ox, cx] : x.coeffs)
    for (auto [oy, cy] : y.coeffs) {
      Coefficient c = detail::checked_mul(cx, cy);
      for (auto [oz, cz] : multiply_items(t, t.orbit_rep(ox), t.orbit_rep(oy)).coeffs)
        r.add_term(oz, detail::checked_mul(c, cz));
    }
  return r;
}

/// Number of double cosets KsL whose product term lies in the orbit of item `target`.
inline Coefficient mu_items(const SubcharacterTable& t, int a, int b, int target) {
  const int o = t.orbit_of(target);
  Coefficient count = 0;
  for (int item : product_terms(t, a, b))
    if (t.orbit_of(item) == o) ++count;
  return count;
}

/// Multiplication coefficient at canonical orbit representatives.
inline Coefficient mu(const SubcharacterTable& t, int o_k, int o_l, int o_t) {
  return mu_items(t, t.orbit_rep(o_k), t.orbit_rep(o_l), t.orbit_rep(o_t));
}

/// Mark: #{sL in G/L : a <= ^s b}, by direct coset scan on the table.
inline Coefficient gamma_items(const SubcharacterTable& t, int a, int b) {
  Coefficient count = 0;
  for (Element s : left_coset_reps(t.group(), t.item(b).subgroup))
    if (t.item_leq(a, t.conjugate_item(s, b))) ++count;
  return count;
}

/// Mark computed from the subcharacters alone, without a table.
inline Coefficient gamma(const FiniteGroup& g, const Subcharacter& a, const Subcharacter& b) {
  Coefficient count = 0;
  for (Element s : left_coset_reps(g, b.subgroup))
    if (subchar_leq(a, conjugate_subcharacter(g, s, b))) ++count;
  return count;
}

/// gamma((K,phi),(L,psi)) = mu^{(K,phi) x (L,psi^-1)}_{(K,1)}.
inline Coefficient gamma_via_mu(const SubcharacterTable& t, int a, int b) {
  return mu_items(t, a, t.inverse_item(b), t.trivial_item(t.item_subgroup(a)));
}

/// All basis products, one sparse row per ordered pair of orbits.
class StructureConstants {
 public:
  using Row = std::vector<std::pair<int, Coefficient>>;

  explicit StructureConstants(const SubcharacterTable& t) : n_(t.orbit_count()), rows_(static_cast<std::size_t>(n_) * n_) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        auto prod = multiply_items(t, t.orbit_rep(a), t.orbit_rep(b));
        rows_[static_cast<std::size_t>(a) * n_ + b].assign(prod.coeffs.begin(), prod.coeffs.end());
      }
  }

  int orbit_count() const { return n_; }
  /// Nonzero coefficients of [a].[b], sorted by orbit id.
  const Row& row(int a, int b) const { return rows_[static_cast<std::size_t>(a) * n_ + b]; }

  Coefficient operator()(int a, int b, int c) const {
    const Row& r = row(a, b);
    auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(c, Coefficient{0}),
                               [](const auto& x, const auto& y) { return x.first < y.first; });
    return (it != r.end() && it->first == c) ? it->second : 0;
  }

 private:
  int n_;
  std::vector<Row> rows_;
};

/// Square matrix of marks over orbit representatives, rows and columns in `order`.
///
/// `order` lists orbits by descending subgroup order, ties broken by orbit id (that is,
/// by canonical representative); this is a linear extension of the reversed orbit
/// poset, so the matrix is lower triangular.
struct MarkTable {
  std::vector<int> order;
  std::vector<int> position;  // orbit id -> row/column
  std::vector<Coefficient> matrix;

  int size() const { return static_cast<int>(order.size()); }
  Coefficient at(int i, int j) const { return matrix[static_cast<std::size_t>(i) * size() + j]; }
  /// Entry for a pair of orbit ids.
  Coefficient marks(int o1, int o2) const { return at(position[o1], position[o2]); }
};

inline std::vector<int> mark_order(const SubcharacterTable& t) {
  std::vector<int> order(t.orbit_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return t.orbit_subgroup_order(a) > t.orbit_subgroup_order(b); });
  return order;
}

inline MarkTable mark_table(const SubcharacterTable& t) {
  MarkTable m;
  m.order = mark_order(t);
  const int n = m.size();
  m.position.assign(n, 0);
  for (int i = 0; i < n; ++i) m.position[m.order[i]] = i;
  m.matrix.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.matrix[static_cast<std::size_t>(i) * n + j] = gamma_items(t, t.orbit_rep(m.order[i]), t.orbit_rep(m.order[j]));
  return m;
}

/// Products of trivial-character basis elements stay in the span of trivial-character orbits.
inline bool burnside_subring_check(const SubcharacterTable& t) {
  for (int a = 0; a < t.orbit_count(); ++a) {
    if (!t.orbit_is_trivial(a)) continue;
    for (int b = 0; b < t.orbit_count(); ++b) {
      if (!t.orbit_is_trivial(b)) continue;
      for (auto [o, c] : multiply_items(t, t.orbit_rep(a), t.orbit_rep(b)).coeffs)
        if (!t.orbit_is_trivial(o)) return false;
    }
  }
  return true;
}

/// True iff A has no nontrivial element of order dividing |G|.
inline bool trivial_torsion(const FiberGroup& a, int group_order) { return a.torsion_order(group_order) == 1; }

}  // namespace fibered
