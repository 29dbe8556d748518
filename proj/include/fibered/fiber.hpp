#pragma once

#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "subgroups.hpp"

namespace fibered {

/// Fiber elements are encoded in mixed radix over the invariants; written additively.
using FiberElement = std::uint32_t;

/// Finite abelian group C_{n1} x ... x C_{nk}.
class FiberGroup {
 public:
  FiberGroup() : FiberGroup(std::vector<int>{1}) {}

  explicit FiberGroup(std::vector<int> invariants) : invariants_(std::move(invariants)) {
    if (invariants_.empty()) throw InputError("fiber needs at least one cyclic factor");
    std::uint64_t order = 1;
    for (int n : invariants_) {
      if (n < 1) throw InputError("cyclic factor order must be at least 1");
      order *= static_cast<std::uint64_t>(n);
      if (order > (std::uint64_t{1} << 24)) throw SizeLimitError("fiber order exceeds 2^24");
      exponent_ = std::lcm(exponent_, n);
    }
    order_ = static_cast<int>(order);
  }

  const std::vector<int>& invariants() const { return invariants_; }
  int order() const { return order_; }
  int exponent() const { return exponent_; }

  std::vector<int> decode(FiberElement a) const {
    std::vector<int> out(invariants_.size());
    for (std::size_t i = 0; i < invariants_.size(); ++i) {
      out[i] = static_cast<int>(a % invariants_[i]);
      a /= invariants_[i];
    }
    return out;
  }

  FiberElement encode(const std::vector<int>& residues) const {
    FiberElement code = 0;
    for (std::size_t i = invariants_.size(); i-- > 0;) {
      int n = invariants_[i];
      code = code * n + static_cast<FiberElement>(((residues[i] % n) + n) % n);
    }
    return code;
  }

  FiberElement add(FiberElement a, FiberElement b) const {
    FiberElement code = 0, scale = 1;
    for (int n : invariants_) {
      FiberElement r = (a % n + b % n) % n;
      code += r * scale;
      scale *= n;
      a /= n;
      b /= n;
    }
    return code;
  }

  FiberElement neg(FiberElement a) const {
    FiberElement code = 0, scale = 1;
    for (int n : invariants_) {
      FiberElement r = (n - a % n) % n;
      code += r * scale;
      scale *= n;
      a /= n;
    }
    return code;
  }

  FiberElement times(int k, FiberElement a) const {
    auto r = decode(a);
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = static_cast<int>((static_cast<long long>(r[i]) * k) % invariants_[i]);
    return encode(r);
  }

  /// "3" for cyclic fibers, "(1,0)" for products.
  std::string format(FiberElement a) const {
    auto r = decode(a);
    if (r.size() == 1) return std::to_string(r[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
  }

  std::string name() const {
    std::string s;
    for (std::size_t i = 0; i < invariants_.size(); ++i) s += (i ? "xC" : "C") + std::to_string(invariants_[i]);
    return s;
  }

  /// Order of the |n|-torsion subgroup {a : n a = 0}.
  int torsion_order(int n) const {
    int t = 1;
    for (int m : invariants_) t *= std::gcd(m, n);
    return t;
  }

  bool operator==(const FiberGroup& o) const { return invariants_ == o.invariants_; }

 private:
  std::vector<int> invariants_;
  int order_ = 1;
  int exponent_ = 1;
};

/// Parses `C<n>(xC<m>)*` or `auto`; `auto` is the cyclic group of order `context_exponent`.
inline FiberGroup parse_fiber(const std::string& spec, int context_exponent) {
  if (spec == "auto") {
    if (context_exponent < 1) throw InputError("auto fiber needs a positive exponent");
    return FiberGroup(std::vector<int>{context_exponent});
  }
  std::vector<int> inv;
  std::size_t i = 0;
  while (true) {
    if (i >= spec.size() || spec[i] != 'C') throw InputError("malformed fiber spec '" + spec + "'");
    ++i;
    std::size_t start = i;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
    if (i == start || i - start > 7) throw InputError("malformed fiber spec '" + spec + "'");
    int n = std::stoi(spec.substr(start, i - start));
    if (n < 1) throw InputError("cyclic factor order must be at least 1");
    inv.push_back(n);
    if (i == spec.size()) break;
    if (spec[i] != 'x') throw InputError("malformed fiber spec '" + spec + "'");
    ++i;
  }
  return FiberGroup(std::move(inv));
}

/// Homomorphism K -> A stored as a value map over all of G; entries off K are zero.
struct Character {
  Subgroup domain;
  std::vector<FiberElement> values;

  FiberElement operator()(Element x) const { return values[x]; }

  bool is_trivial() const {
    for (FiberElement v : values)
      if (v != 0) return false;
    return true;
  }

  bool operator==(const Character&) const = default;
  /// Subgroup first, then lex on values in element order.
  auto operator<=>(const Character& o) const {
    if (auto c = domain <=> o.domain; c != 0) return c;
    return values <=> o.values;
  }
};

inline Character trivial_character(const FiniteGroup& g, const Subgroup& k) {
  return Character{k, std::vector<FiberElement>(g.order(), 0)};
}

inline bool is_homomorphism(const FiniteGroup& g, const FiberGroup& a, const Character& c) {
  if (c.values[0] != 0) return false;
  bool ok = true;
  c.domain.members.for_each([&](Element x) {
    c.domain.members.for_each([&](Element y) {
      if (c.values[g.mul(x, y)] != a.add(c.values[x], c.values[y])) ok = false;
    });
  });
  return ok;
}

namespace detail {

/// Extends generator images along words; empty result when the assignment is not a homomorphism.
inline bool extend_from_generators(const FiniteGroup& g, const FiberGroup& a, const Subgroup& k,
                                   const std::vector<Element>& gens, const std::vector<FiberElement>& images,
                                   std::vector<FiberElement>& values) {
  values.assign(g.order(), 0);
  ElementSet seen = ElementSet::singleton(0);
  std::vector<Element> order{0};
  for (std::size_t head = 0; head < order.size(); ++head) {
    Element x = order[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Element y = g.mul(x, gens[i]);
      FiberElement v = a.add(values[x], images[i]);
      if (seen.contains(y)) {
        if (values[y] != v) return false;
      } else {
        seen.insert(y);
        values[y] = v;
        order.push_back(y);
      }
    }
  }
  return seen == k.members;
}

}  // namespace detail

/// All homomorphisms K -> A, sorted lexicographically on their value vectors.
inline std::vector<Character> hom_set(const FiniteGroup& g, const Subgroup& k, const FiberGroup& a,
                                      const std::vector<Element>& gens) {
  // Candidate images of a generator of order m: fiber elements killed by m.
  std::vector<std::vector<FiberElement>> candidates;
  for (Element x : gens) {
    int m = g.element_order(x);
    std::vector<FiberElement> c;
    for (FiberElement v = 0; v < static_cast<FiberElement>(a.order()); ++v)
      if (a.times(m, v) == 0) c.push_back(v);
    candidates.push_back(std::move(c));
  }
  std::vector<Character> out;
  std::vector<std::size_t> pos(gens.size(), 0);
  std::vector<FiberElement> images(gens.size());
  std::vector<FiberElement> values;
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][pos[i]];
    if (detail::extend_from_generators(g, a, k, gens, images, values)) out.push_back(Character{k, values});
    std::size_t i = 0;
    while (i < gens.size() && ++pos[i] == candidates[i].size()) pos[i++] = 0;
    if (i == gens.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Character> hom_set(const FiniteGroup& g, const Subgroup& k, const FiberGroup& a) {
  return hom_set(g, k, a, generators_of(g, k));
}

/// ^g c, defined on ^gK by x -> c(g^-1 x g).
inline Character conjugate_character(const FiniteGroup& g, Element by, const Character& c) {
  Character out{conjugate_subgroup(g, by, c.domain), std::vector<FiberElement>(g.order(), 0)};
  Element inv = g.inv(by);
  out.domain.members.for_each([&](Element x) { out.values[x] = c.values[g.conj(inv, x)]; });
  return out;
}

/// Pointwise product on the intersection of the domains.
inline Character char_product(const FiberGroup& a, const Character& c1, const Character& c2) {
  Character out{intersect(c1.domain, c2.domain), std::vector<FiberElement>(c1.values.size(), 0)};
  out.domain.members.for_each([&](Element x) { out.values[x] = a.add(c1.values[x], c2.values[x]); });
  return out;
}

inline Character char_inverse(const FiberGroup& a, const Character& c) {
  Character out = c;
  for (auto& v : out.values) v = a.neg(v);
  return out;
}

inline Character restrict_character(const Character& c, const Subgroup& to) {
  Character out{to, std::vector<FiberElement>(c.values.size(), 0)};
  to.members.for_each([&](Element x) { out.values[x] = c.values[x]; });
  return out;
}

}  // namespace fibered
