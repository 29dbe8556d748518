#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "group.hpp"

namespace fibered::catalog {

namespace detail {

inline std::vector<int> cycle_perm(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i + 1;
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) img[c[k] - 1] = c[(k + 1) % c.size()];
  return img;
}

inline std::vector<int> full_cycle(int first, int last) {
  std::vector<int> c;
  for (int i = first; i <= last; ++i) c.push_back(i);
  return c;
}

/// Left-regular images of i and j in Q8; points 1..8 are 1, -1, i, -i, j, -j, k, -k.
inline std::vector<std::vector<int>> quaternion_generators() {
  // unit index u in {0:1, 1:i, 2:j, 3:k}; element = (sign, u)
  static constexpr int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto point = [](int sign, int u) { return 2 * u + (sign < 0 ? 1 : 0) + 1; };
  std::vector<std::vector<int>> gens;
  for (int left : {1, 2}) {
    std::vector<int> img(8);
    for (int u = 0; u < 4; ++u)
      for (int sign : {1, -1}) img[point(sign, u) - 1] = point(sign * unit_sign[left][u], unit_mul[left][u]);
    gens.push_back(img);
  }
  return gens;
}

}  // namespace detail

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> all = {"C1",    "C2",    "C3",    "C4", "C5", "C6",  "C7",  "C8",
                                               "C9",    "C10",   "C11",   "C12", "C2xC2", "C2xC4", "C2xC6",
                                               "S3",    "D8",    "Q8",    "D10", "D12", "A4"};
  return all;
}

/// Permutation presentation of a catalog group, or nothing for unknown names.
inline std::optional<GroupSpec> lookup(const std::string& name) {
  using detail::cycle_perm;
  using detail::full_cycle;
  GroupSpec spec;
  spec.name = name;
  if (name.size() >= 2 && name[0] == 'C' && name.find('x') == std::string::npos) {
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (...) {
      return std::nullopt;
    }
    if (n < 1 || n > 12 || "C" + std::to_string(n) != name) return std::nullopt;
    spec.perm_gens = {n == 1 ? std::vector<int>{1} : cycle_perm(n, {full_cycle(1, n)})};
    return spec;
  }
  if (name == "C2xC2") spec.perm_gens = {cycle_perm(4, {{1, 2}}), cycle_perm(4, {{3, 4}})};
  else if (name == "C2xC4") spec.perm_gens = {cycle_perm(6, {{1, 2}}), cycle_perm(6, {full_cycle(3, 6)})};
  else if (name == "C2xC6") spec.perm_gens = {cycle_perm(8, {{1, 2}}), cycle_perm(8, {full_cycle(3, 8)})};
  else if (name == "S3") spec.perm_gens = {cycle_perm(3, {{1, 2, 3}}), cycle_perm(3, {{1, 2}})};
  else if (name == "D8") spec.perm_gens = {cycle_perm(4, {{1, 2, 3, 4}}), cycle_perm(4, {{1, 3}})};
  else if (name == "Q8") spec.perm_gens = detail::quaternion_generators();
  else if (name == "D10") spec.perm_gens = {cycle_perm(5, {full_cycle(1, 5)}), cycle_perm(5, {{2, 5}, {3, 4}})};
  else if (name == "D12") spec.perm_gens = {cycle_perm(6, {full_cycle(1, 6)}), cycle_perm(6, {{2, 6}, {3, 5}})};
  else if (name == "A4") spec.perm_gens = {cycle_perm(4, {{1, 2, 3}}), cycle_perm(4, {{2, 3, 4}})};
  else return std::nullopt;
  return spec;
}

inline FiniteGroup group(const std::string& name) {
  auto spec = lookup(name);
  if (!spec) throw InputError("unknown catalog group '" + name + "'");
  return build_group(*spec);
}

}  // namespace fibered::catalog
