#pragma once

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "fiber.hpp"

namespace fibered {

/// A pair (K, phi) with phi in Hom(K, A).
struct Subcharacter {
  Subgroup subgroup;
  Character character;

  bool operator==(const Subcharacter& o) const { return character == o.character; }
  auto operator<=>(const Subcharacter& o) const { return character <=> o.character; }
};

/// (K,phi) <= (L,psi) iff K <= L and psi restricted to K equals phi.
inline bool subchar_leq(const Subcharacter& a, const Subcharacter& b) {
  if (!a.subgroup.members.subset_of(b.subgroup.members)) return false;
  bool ok = true;
  a.subgroup.members.for_each([&](Element x) {
    if (a.character.values[x] != b.character.values[x]) ok = false;
  });
  return ok;
}

inline Subcharacter conjugate_subcharacter(const FiniteGroup& g, Element by, const Subcharacter& s) {
  Character c = conjugate_character(g, by, s.character);
  return Subcharacter{c.domain, std::move(c)};
}

/// N_G(K, phi).
inline Subgroup stabilizer(const FiniteGroup& g, const Subcharacter& s) {
  ElementSet out;
  for (Element x = 0; x < g.order(); ++x)
    if (conjugate_subcharacter(g, x, s) == s) out.insert(x);
  return Subgroup(out);
}

/// The G-poset of all subcharacters of G with values in A, and its orbit poset.
///
/// Items are stored contiguously per subgroup (subgroups in bitset order, characters
/// in lex order), so the canonical minimum of an orbit is its smallest item index.
/// Orbit ids are assigned in increasing order of their representative item.
class SubcharacterTable {
 public:
  SubcharacterTable(FiniteGroup group, FiberGroup fiber)
      : group_(std::move(group)), fiber_(std::move(fiber)), subgroups_(group_) {
    const int ns = subgroups_.size();
    const int n = group_.order();
    first_item_.resize(ns + 1);
    lookup_.resize(ns);
    key_radix_ = static_cast<std::uint64_t>(fiber_.order());
    for (int s = 0; s < ns; ++s) {
      first_item_[s] = static_cast<int>(items_.size());
      const auto& gens = subgroups_.generators(s);
      long double span = 1;
      for (std::size_t i = 0; i < gens.size(); ++i) span *= static_cast<long double>(key_radix_);
      if (span > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2))
        throw SizeLimitError("fiber too large for subgroup with " + std::to_string(gens.size()) + " generators");
      for (auto& c : hom_set(group_, subgroups_.at(s), fiber_, gens)) {
        lookup_[s].emplace(key_of(s, c.values), static_cast<int>(items_.size()));
        item_subgroup_.push_back(s);
        items_.push_back(Subcharacter{c.domain, std::move(c)});
      }
    }
    first_item_[ns] = static_cast<int>(items_.size());
    const int ni = item_count();

    conj_.assign(static_cast<std::size_t>(n) * ni, -1);
    std::vector<FiberElement> vals;
    for (Element g = 0; g < n; ++g) {
      Element ginv = group_.inv(g);
      for (int i = 0; i < ni; ++i) {
        int t = subgroups_.conjugate(g, item_subgroup_[i]);
        const auto& gens = subgroups_.generators(t);
        vals.assign(n, 0);
        for (Element y : gens) vals[y] = items_[i].character.values[group_.conj(ginv, y)];
        conj_[static_cast<std::size_t>(g) * ni + i] = find_by_key(t, key_of(t, vals));
      }
    }

    orbit_of_.assign(ni, -1);
    for (int i = 0; i < ni; ++i) {
      if (orbit_of_[i] >= 0) continue;
      const int o = static_cast<int>(orbit_reps_.size());
      orbit_reps_.push_back(i);
      std::vector<int> members;
      for (Element g = 0; g < n; ++g) {
        int j = conjugate_item(g, i);
        if (orbit_of_[j] < 0) {
          orbit_of_[j] = o;
          members.push_back(j);
        }
      }
      std::sort(members.begin(), members.end());
      orbit_items_.push_back(std::move(members));
    }

    const int no = orbit_count();
    below_.resize(ns);
    for (int s = 0; s < ns; ++s)
      for (int t = 0; t < ns; ++t)
        if (subgroups_.at(t).members.subset_of(subgroups_.at(s).members)) below_[s].push_back(t);
    leq_.assign(static_cast<std::size_t>(no) * no, 0);
    for (int j = 0; j < ni; ++j)
      for (int t : below_[item_subgroup_[j]]) {
        int i = restrict_item(j, t);
        leq_[static_cast<std::size_t>(orbit_of_[i]) * no + orbit_of_[j]] = 1;
      }
  }

  const FiniteGroup& group() const { return group_; }
  const FiberGroup& fiber() const { return fiber_; }
  const SubgroupClassification& subgroups() const { return subgroups_; }

  int item_count() const { return static_cast<int>(items_.size()); }
  const Subcharacter& item(int i) const { return items_[i]; }
  int item_subgroup(int i) const { return item_subgroup_[i]; }
  int subgroup_order(int i) const { return items_[i].subgroup.order; }
  /// Items over subgroup s occupy [first_item(s), first_item(s + 1)).
  int first_item(int s) const { return first_item_[s]; }
  int hom_count(int s) const { return first_item_[s + 1] - first_item_[s]; }
  int trivial_item(int s) const { return first_item_[s]; }
  bool is_trivial_item(int i) const { return i == first_item_[item_subgroup_[i]]; }

  /// Index of a subcharacter, or -1 when it is not a subcharacter of this table.
  int index_of(const Subcharacter& s) const {
    int sub = subgroups_.index_of(s.subgroup);
    if (sub < 0 || s.character.domain != s.subgroup) return -1;
    int i = find_by_key(sub, key_of(sub, s.character.values));
    return (i >= 0 && items_[i].character == s.character) ? i : -1;
  }

  int conjugate_item(Element g, int i) const { return conj_[static_cast<std::size_t>(g) * item_count() + i]; }

  /// Restriction of item i to subgroup t, which must lie inside the item's subgroup.
  int restrict_item(int i, int t) const { return find_by_key(t, key_of(t, items_[i].character.values)); }

  /// phi . psi: both restricted to the intersection of the domains, then multiplied.
  int product_item(int i, int j) const {
    int t = subgroups_.index_of(items_[i].subgroup.members & items_[j].subgroup.members);
    return product_on(i, j, t);
  }

  /// phi . ^g psi without materializing the conjugate.
  int product_with_conjugate(int i, Element g, int j) const { return product_item(i, conjugate_item(g, j)); }

  int inverse_item(int i) const {
    int s = item_subgroup_[i];
    std::uint64_t key = 0;
    const auto& gens = subgroups_.generators(s);
    for (std::size_t k = gens.size(); k-- > 0;)
      key = key * key_radix_ + fiber_.neg(items_[i].character.values[gens[k]]);
    return find_by_key(s, key);
  }

  bool item_leq(int i, int j) const {
    if (!items_[i].subgroup.members.subset_of(items_[j].subgroup.members)) return false;
    return restrict_item(j, item_subgroup_[i]) == i;
  }

  Subgroup item_stabilizer(int i) const {
    ElementSet out;
    for (Element g = 0; g < group_.order(); ++g)
      if (conjugate_item(g, i) == i) out.insert(g);
    return Subgroup(out);
  }

  int orbit_count() const { return static_cast<int>(orbit_reps_.size()); }
  int orbit_of(int i) const { return orbit_of_[i]; }
  int orbit_rep(int o) const { return orbit_reps_[o]; }
  const std::vector<int>& orbit_items(int o) const { return orbit_items_[o]; }
  int orbit_size(int o) const { return static_cast<int>(orbit_items_[o].size()); }
  int stabilizer_order(int o) const { return group_.order() / orbit_size(o); }
  int orbit_subgroup_order(int o) const { return subgroup_order(orbit_reps_[o]); }
  int orbit_subgroup(int o) const { return item_subgroup_[orbit_reps_[o]]; }
  bool orbit_is_trivial(int o) const { return is_trivial_item(orbit_reps_[o]); }
  /// [K,phi] <= [L,psi] in the orbit poset.
  bool leq(int o1, int o2) const { return leq_[static_cast<std::size_t>(o1) * orbit_count() + o2] != 0; }
  /// Orbit of (1,1).
  int bottom_orbit() const { return orbit_of_[trivial_item(subgroups_.index_of(ElementSet::singleton(0)))]; }
  /// Orbit of (G,1).
  int top_orbit() const { return orbit_of_[trivial_item(subgroups_.index_of(group_.all()))]; }
  const std::vector<int>& subgroups_below(int s) const { return below_[s]; }

 private:
  std::uint64_t key_of(int s, const std::vector<FiberElement>& values) const {
    std::uint64_t key = 0;
    const auto& gens = subgroups_.generators(s);
    for (std::size_t k = gens.size(); k-- > 0;) key = key * key_radix_ + values[gens[k]];
    return key;
  }

  int find_by_key(int s, std::uint64_t key) const {
    auto it = lookup_[s].find(key);
    return it == lookup_[s].end() ? -1 : it->second;
  }

  int product_on(int i, int j, int t) const {
    std::uint64_t key = 0;
    const auto& gens = subgroups_.generators(t);
    const auto& a = items_[i].character.values;
    const auto& b = items_[j].character.values;
    for (std::size_t k = gens.size(); k-- > 0;) key = key * key_radix_ + fiber_.add(a[gens[k]], b[gens[k]]);
    return find_by_key(t, key);
  }

  FiniteGroup group_;
  FiberGroup fiber_;
  SubgroupClassification subgroups_;
  std::uint64_t key_radix_ = 1;
  std::vector<Subcharacter> items_;
  std::vector<int> item_subgroup_;
  std::vector<int> first_item_;
  std::vector<std::unordered_map<std::uint64_t, int>> lookup_;
  std::vector<int> conj_;
  std::vector<int> orbit_of_;
  std::vector<int> orbit_reps_;
  std::vector<std::vector<int>> orbit_items_;
  std::vector<std::vector<int>> below_;
  std::vector<unsigned char> leq_;
};

inline SubcharacterTable build_table(FiniteGroup g, FiberGroup a) { return SubcharacterTable(std::move(g), std::move(a)); }

/// Existential test: some conjugate of the second orbit's members lies above the first rep.
inline bool orbit_leq(const SubcharacterTable& t, int o1, int o2) {
  const int rep = t.orbit_rep(o1);
  for (int j : t.orbit_items(o2))
    if (t.item_leq(rep, j)) return true;
  return false;
}

}  // namespace fibered
