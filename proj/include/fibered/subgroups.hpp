#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "group.hpp"

namespace fibered {

struct Subgroup {
  ElementSet members;
  int order = 0;

  Subgroup() = default;
  explicit Subgroup(ElementSet m) : members(m), order(m.size()) {}

  bool contains(Element x) const { return members.contains(x); }
  bool operator==(const Subgroup& o) const { return members == o.members; }
  auto operator<=>(const Subgroup& o) const { return members <=> o.members; }
};

inline Subgroup trivial_subgroup() { return Subgroup(ElementSet::singleton(0)); }
inline Subgroup whole_group(const FiniteGroup& g) { return Subgroup(g.all()); }

inline bool is_subgroup(const FiniteGroup& g, ElementSet s) {
  if (!s.contains(0)) return false;
  bool closed = true;
  s.for_each([&](Element x) {
    if (!s.contains(g.inv(x))) closed = false;
    s.for_each([&](Element y) {
      if (!s.contains(g.mul(x, y))) closed = false;
    });
  });
  return closed;
}

/// ^gK = g K g^-1
inline Subgroup conjugate_subgroup(const FiniteGroup& g, Element by, const Subgroup& k) {
  ElementSet out;
  k.members.for_each([&](Element x) { out.insert(g.conj(by, x)); });
  return Subgroup(out);
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) { return Subgroup(a.members & b.members); }

/// Greedy generating set: smallest element indices first.
inline std::vector<Element> generators_of(const FiniteGroup& g, const Subgroup& k) {
  std::vector<Element> gens;
  ElementSet reached = ElementSet::singleton(0);
  k.members.for_each([&](Element x) {
    if (!reached.contains(x)) {
      gens.push_back(x);
      reached = g.closure(gens);
    }
  });
  return gens;
}

/// One representative per double coset KsL, each the minimal index in its coset.
inline std::vector<Element> double_coset_reps(const FiniteGroup& g, const Subgroup& k, const Subgroup& l) {
  std::vector<Element> reps;
  ElementSet covered;
  for (Element s = 0; s < g.order(); ++s) {
    if (covered.contains(s)) continue;
    reps.push_back(s);
    k.members.for_each([&](Element x) {
      Element xs = g.mul(x, s);
      l.members.for_each([&](Element y) { covered.insert(g.mul(xs, y)); });
    });
  }
  return reps;
}

/// Left coset representatives sL, each the minimal index in its coset.
inline std::vector<Element> left_coset_reps(const FiniteGroup& g, const Subgroup& l) {
  std::vector<Element> reps;
  ElementSet covered;
  for (Element s = 0; s < g.order(); ++s) {
    if (covered.contains(s)) continue;
    reps.push_back(s);
    l.members.for_each([&](Element y) { covered.insert(g.mul(s, y)); });
  }
  return reps;
}

/// Left coset representatives of `sub` inside `over` (sub <= over), minimal indices.
inline std::vector<Element> left_coset_reps_in(const FiniteGroup& g, const Subgroup& over, const Subgroup& sub) {
  std::vector<Element> reps;
  ElementSet covered;
  over.members.for_each([&](Element s) {
    if (covered.contains(s)) return;
    reps.push_back(s);
    sub.members.for_each([&](Element y) { covered.insert(g.mul(s, y)); });
  });
  return reps;
}

/// |(G/L)^K|: cosets sL with K sL = sL.
inline int fixed_points_count(const FiniteGroup& g, const Subgroup& k, const Subgroup& l) {
  int count = 0;
  for (Element s : left_coset_reps(g, l)) {
    // K fixes sL iff s^-1 K s <= L
    bool fixed = true;
    Element si = g.inv(s);
    k.members.for_each([&](Element x) {
      if (!l.contains(g.conj(si, x))) fixed = false;
    });
    if (fixed) ++count;
  }
  return count;
}

inline Subgroup normalizer(const FiniteGroup& g, const Subgroup& k) {
  ElementSet n;
  for (Element x = 0; x < g.order(); ++x)
    if (conjugate_subgroup(g, x, k) == k) n.insert(x);
  return Subgroup(n);
}

inline Subgroup centralizer(const FiniteGroup& g, const Subgroup& k) {
  ElementSet c;
  for (Element x = 0; x < g.order(); ++x) {
    bool commutes = true;
    k.members.for_each([&](Element y) {
      if (g.mul(x, y) != g.mul(y, x)) commutes = false;
    });
    if (commutes) c.insert(x);
  }
  return Subgroup(c);
}

inline Subgroup center(const FiniteGroup& g) { return centralizer(g, whole_group(g)); }

/// Product set K*C as a subgroup; caller guarantees it is one (e.g. C centralizes K).
inline ElementSet product_set(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  ElementSet out;
  a.members.for_each([&](Element x) { b.members.for_each([&](Element y) { out.insert(g.mul(x, y)); }); });
  return out;
}

/// All subgroups of a group, their conjugacy classes and normalizers.
class SubgroupClassification {
 public:
  /// Cyclic-extension lattice climb: joins of cyclic subgroups, iterated to a fixed point.
  explicit SubgroupClassification(const FiniteGroup& g) {
    std::unordered_map<std::uint64_t, std::vector<Element>> found;  // members -> generators
    std::vector<ElementSet> cyclic_sets;
    std::vector<Element> cyclic_gen;
    for (Element x = 0; x < g.order(); ++x) {
      ElementSet c = g.closure({x});
      if (found.emplace(c.bits(), x == 0 ? std::vector<Element>{} : std::vector<Element>{x}).second) {
        cyclic_sets.push_back(c);
        cyclic_gen.push_back(x);
      }
    }
    std::vector<ElementSet> frontier = cyclic_sets;
    while (!frontier.empty()) {
      std::vector<ElementSet> next;
      for (ElementSet s : frontier) {
        const std::vector<Element> base = found.at(s.bits());
        for (std::size_t c = 0; c < cyclic_sets.size(); ++c) {
          if (cyclic_sets[c].subset_of(s)) continue;
          std::vector<Element> gens = base;
          gens.push_back(cyclic_gen[c]);
          ElementSet joined = g.closure(gens);
          if (found.emplace(joined.bits(), std::move(gens)).second) next.push_back(joined);
        }
      }
      frontier.swap(next);
    }
    all_.reserve(found.size());
    for (const auto& [bits, gens] : found) all_.emplace_back(ElementSet(bits));
    std::sort(all_.begin(), all_.end());
    for (std::size_t i = 0; i < all_.size(); ++i) index_.emplace(all_[i].members.bits(), static_cast<int>(i));

    const int n = static_cast<int>(all_.size());
    class_of_.assign(n, -1);
    normalizers_.resize(n);
    conj_action_.assign(static_cast<std::size_t>(g.order()) * n, -1);
    for (int i = 0; i < n; ++i) {
      for (Element x = 0; x < g.order(); ++x) conj_action_[x * n + i] = index_of(conjugate_subgroup(g, x, all_[i]));
    }
    for (int i = 0; i < n; ++i) {
      ElementSet norm;
      for (Element x = 0; x < g.order(); ++x)
        if (conj_action_[x * n + i] == i) norm.insert(x);
      normalizers_[i] = Subgroup(norm);
      if (class_of_[i] >= 0) continue;
      // Subgroups are sorted, so i is the smallest member of its class.
      const int cls = static_cast<int>(classes_.size());
      std::vector<int> members;
      for (Element x = 0; x < g.order(); ++x) {
        int j = conj_action_[x * n + i];
        if (class_of_[j] < 0) {
          class_of_[j] = cls;
          members.push_back(j);
        }
      }
      std::sort(members.begin(), members.end());
      classes_.push_back(std::move(members));
      class_reps_.push_back(i);
    }
    generators_.reserve(n);
    for (const auto& s : all_) generators_.push_back(generators_of(g, s));
  }

  int size() const { return static_cast<int>(all_.size()); }
  const std::vector<Subgroup>& all() const { return all_; }
  const Subgroup& at(int i) const { return all_[i]; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  const std::vector<int>& class_reps() const { return class_reps_; }
  int class_of(int i) const { return class_of_[i]; }
  const Subgroup& normalizer(int i) const { return normalizers_[i]; }
  const std::vector<Element>& generators(int i) const { return generators_[i]; }

  /// Index of a subgroup, or -1 when the set is not one of the enumerated subgroups.
  int index_of(ElementSet members) const {
    auto it = index_.find(members.bits());
    return it == index_.end() ? -1 : it->second;
  }
  int index_of(const Subgroup& s) const { return index_of(s.members); }

  /// Index of ^x K_i.
  int conjugate(Element x, int i) const { return conj_action_[x * size() + i]; }

 private:
  std::vector<Subgroup> all_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_reps_;
  std::vector<int> class_of_;
  std::vector<Subgroup> normalizers_;
  std::vector<std::vector<Element>> generators_;
  std::vector<int> conj_action_;
};

inline SubgroupClassification subgroups(const FiniteGroup& g) { return SubgroupClassification(g); }

}  // namespace fibered
