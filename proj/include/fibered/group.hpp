#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace fibered {

using Element = int;

inline constexpr int kHardOrderCap = 64;
inline constexpr int kDefaultOrderCap = 64;

/// Set of element indices of a group with at most 64 elements.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet singleton(Element x) { return ElementSet(std::uint64_t{1} << x); }
  static constexpr ElementSet first_n(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(Element x) const { return (bits_ >> x) & 1u; }
  constexpr void insert(Element x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(Element x) { bits_ &= ~(std::uint64_t{1} << x); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr Element min() const { return std::countr_zero(bits_); }

  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  constexpr bool operator==(const ElementSet&) const = default;
  constexpr auto operator<=>(const ElementSet&) const = default;

  /// Calls f(x) for every member in increasing index order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Element>(std::countr_zero(b)));
  }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// A finite group given by its multiplication table. Element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup("C1", 1, {0}, {"e"}) {}

  /// Validates the table eagerly: closure, identity at 0, inverses, associativity.
  FiniteGroup(std::string name, int order, std::vector<Element> table, std::vector<std::string> labels)
      : name_(std::move(name)), order_(order), mul_(std::move(table)), labels_(std::move(labels)) {
    if (order_ < 1) throw InputError("group order must be positive");
    if (order_ > kHardOrderCap)
      throw SizeLimitError("group order " + std::to_string(order_) + " exceeds hard cap 64");
    if (static_cast<int>(mul_.size()) != order_ * order_)
      throw InputError("multiplication table has wrong size");
    if (static_cast<int>(labels_.size()) != order_) throw InputError("labels must have one entry per element");
    for (Element v : mul_)
      if (v < 0 || v >= order_) throw InputError("multiplication table entry out of range");
    for (Element x = 0; x < order_; ++x)
      if (mul(0, x) != x || mul(x, 0) != x) throw InputError("element 0 is not the identity");
    inv_.assign(order_, -1);
    for (Element x = 0; x < order_; ++x) {
      for (Element y = 0; y < order_; ++y) {
        if (mul(x, y) == 0) {
          if (mul(y, x) != 0) throw InputError("one-sided inverse in multiplication table");
          inv_[x] = y;
          break;
        }
      }
      if (inv_[x] < 0) throw InputError("element " + std::to_string(x) + " has no inverse");
    }
    for (Element x = 0; x < order_; ++x)
      for (Element y = 0; y < order_; ++y)
        for (Element z = 0; z < order_; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z)))
            throw InputError("multiplication table is not associative");
    conj_.resize(static_cast<std::size_t>(order_) * order_);
    for (Element g = 0; g < order_; ++g)
      for (Element x = 0; x < order_; ++x) conj_[g * order_ + x] = mul(mul(g, x), inv_[g]);
  }

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  static constexpr Element identity() { return 0; }
  Element mul(Element x, Element y) const { return mul_[x * order_ + y]; }
  Element inv(Element x) const { return inv_[x]; }
  /// g x g^-1
  Element conj(Element g, Element x) const { return conj_[g * order_ + x]; }
  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Element>& table() const { return mul_; }
  ElementSet all() const { return ElementSet::first_n(order_); }

  int element_order(Element x) const {
    int k = 1;
    for (Element y = x; y != 0; y = mul(y, x)) ++k;
    return k;
  }

  int exponent() const {
    int e = 1;
    for (Element x = 0; x < order_; ++x) e = std::lcm(e, element_order(x));
    return e;
  }

  bool is_abelian() const {
    for (Element x = 0; x < order_; ++x)
      for (Element y = 0; y < x; ++y)
        if (mul(x, y) != mul(y, x)) return false;
    return true;
  }

  /// Elements generated by `gens`, by right-multiplication closure.
  ElementSet closure(const std::vector<Element>& gens) const {
    ElementSet seen = ElementSet::singleton(0);
    std::vector<Element> frontier{0};
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (Element x : frontier)
        for (Element g : gens) {
          Element y = mul(x, g);
          if (!seen.contains(y)) {
            seen.insert(y);
            next.push_back(y);
          }
        }
      frontier.swap(next);
    }
    return seen;
  }

 private:
  std::string name_;
  int order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<Element> conj_;
  std::vector<std::string> labels_;
};

/// A permutation on {0..n-1}; images are 0-indexed internally.
using Permutation = std::vector<int>;

/// Cycle notation with 1-indexed points, "()" for the identity.
inline std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Group input record: exactly one of `cayley` (0-indexed table) or `perm_gens`
/// (1-indexed image lists) is non-empty.
struct GroupSpec {
  std::string name;
  std::vector<std::vector<int>> cayley;
  std::vector<std::vector<int>> perm_gens;
  std::vector<std::string> labels;  // optional, Cayley input only
};

namespace detail {

inline FiniteGroup group_from_cayley(const GroupSpec& spec) {
  const int n = static_cast<int>(spec.cayley.size());
  if (n == 0) throw InputError("empty Cayley table");
  for (const auto& row : spec.cayley)
    if (static_cast<int>(row.size()) != n) throw InputError("Cayley table is not square");
  for (const auto& row : spec.cayley)
    for (int v : row)
      if (v < 0 || v >= n) throw InputError("Cayley table entry out of range");
  // Locate the identity and move it to index 0, keeping the other elements in order.
  int e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y) ok = spec.cayley[x][y] == y && spec.cayley[y][x] == y;
    if (ok) e = x;
  }
  if (e < 0) throw InputError("Cayley table has no identity element");
  std::vector<int> old_of_new;
  old_of_new.push_back(e);
  for (int x = 0; x < n; ++x)
    if (x != e) old_of_new.push_back(x);
  std::vector<int> new_of_old(n);
  for (int i = 0; i < n; ++i) new_of_old[old_of_new[i]] = i;
  std::vector<Element> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i * n + j] = new_of_old[spec.cayley[old_of_new[i]][old_of_new[j]]];
  std::vector<std::string> labels(n);
  if (!spec.labels.empty() && static_cast<int>(spec.labels.size()) != n)
    throw InputError("labels must have one entry per element");
  for (int i = 0; i < n; ++i)
    labels[i] = spec.labels.empty() ? "g" + std::to_string(old_of_new[i]) : spec.labels[old_of_new[i]];
  return FiniteGroup(spec.name, n, std::move(mul), std::move(labels));
}

inline FiniteGroup group_from_permutations(const GroupSpec& spec, int max_order) {
  std::size_t degree = 0;
  for (const auto& g : spec.perm_gens) degree = std::max(degree, g.size());
  std::vector<Permutation> gens;
  for (const auto& g : spec.perm_gens) {
    Permutation p(degree);
    std::vector<bool> hit(degree, false);
    for (std::size_t i = 0; i < degree; ++i) {
      int img = i < g.size() ? g[i] - 1 : static_cast<int>(i);
      if (img < 0 || img >= static_cast<int>(degree) || hit[img])
        throw InputError("generator is not a permutation");
      hit[img] = true;
      p[i] = img;
    }
    gens.push_back(std::move(p));
  }
  auto compose = [](const Permutation& p, const Permutation& q) {
    // (p*q)(i) = p(q(i))
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  // BFS over generator words, appending generators on the right: shortest-lex order.
  std::map<Permutation, int> index{{id, 0}};
  std::vector<Permutation> elements{id};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Permutation y = compose(elements[head], g);
      if (index.emplace(y, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(y));
        if (static_cast<int>(elements.size()) > max_order)
          throw SizeLimitError("generated group order exceeds cap " + std::to_string(max_order));
      }
    }
  }
  const int n = static_cast<int>(elements.size());
  std::vector<Element> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i * n + j] = index.at(compose(elements[i], elements[j]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elements) labels.push_back(cycle_string(p));
  return FiniteGroup(spec.name, n, std::move(mul), std::move(labels));
}

}  // namespace detail

/// Builds and validates a group from a Cayley table or permutation generators.
inline FiniteGroup build_group(const GroupSpec& spec, int max_order = kDefaultOrderCap) {
  if (max_order < 1 || max_order > kHardOrderCap)
    throw InputError("order cap must lie in [1, 64]");
  const bool has_table = !spec.cayley.empty();
  const bool has_gens = !spec.perm_gens.empty();
  if (has_table == has_gens) throw InputError("group record needs exactly one of cayley or perm_gens");
  if (has_table) {
    if (static_cast<int>(spec.cayley.size()) > max_order)
      throw SizeLimitError("group order exceeds cap " + std::to_string(max_order));
    return detail::group_from_cayley(spec);
  }
  return detail::group_from_permutations(spec, max_order);
}

}  // namespace fibered
