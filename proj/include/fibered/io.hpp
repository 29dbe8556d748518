#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "species.hpp"
#include "suites.hpp"

namespace fibered::io {

using nlohmann::json;

/// {"name": ..., "perm_gens": [[...]]} or {"name": ..., "cayley": [[...]], "labels": [...]}.
inline GroupSpec group_spec_from_json(const json& j) {
  if (!j.is_object()) throw InputError("group record must be a JSON object");
  GroupSpec spec;
  try {
    spec.name = j.value("name", std::string("G"));
    if (j.contains("cayley")) spec.cayley = j.at("cayley").get<std::vector<std::vector<int>>>();
    if (j.contains("perm_gens")) spec.perm_gens = j.at("perm_gens").get<std::vector<std::vector<int>>>();
    if (j.contains("labels")) spec.labels = j.at("labels").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad group record: ") + e.what());
  }
  return spec;
}

inline json group_to_json(const FiniteGroup& g) {
  std::vector<std::vector<int>> rows(g.order(), std::vector<int>(g.order()));
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) rows[x][y] = g.mul(x, y);
  return json{{"name", g.name()}, {"cayley", rows}, {"labels", g.labels()}};
}

/// A catalog name, or a path to a JSON group record.
inline FiniteGroup load_group(const std::string& name_or_path, int max_order = kDefaultOrderCap) {
  if (auto spec = catalog::lookup(name_or_path)) return build_group(*spec, max_order);
  std::ifstream in(name_or_path);
  if (!in) throw InputError("no catalog group or readable file named '" + name_or_path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("cannot parse " + name_or_path + ": " + e.what());
  }
  return build_group(group_spec_from_json(j), max_order);
}

/// Subgroup generators (element labels) and the character's values on them.
inline json orbit_descriptor(const SubcharacterTable& t, int orbit) {
  const int rep = t.orbit_rep(orbit);
  const int s = t.item_subgroup(rep);
  json gens = json::array(), values = json::array();
  for (Element x : t.subgroups().generators(s)) {
    gens.push_back(t.group().label(x));
    values.push_back(t.fiber().format(t.item(rep).character.values[x]));
  }
  return json{{"orbit", orbit},
              {"subgroup_order", t.subgroup_order(rep)},
              {"generators", gens},
              {"character", values},
              {"orbit_size", t.orbit_size(orbit)},
              {"stabilizer_order", t.stabilizer_order(orbit)}};
}

inline std::string orbit_label(const SubcharacterTable& t, int orbit) {
  const int rep = t.orbit_rep(orbit);
  std::string s = "<";
  bool first = true;
  for (Element x : t.subgroups().generators(t.item_subgroup(rep))) {
    s += (first ? "" : ",") + t.group().label(x) + "->" + t.fiber().format(t.item(rep).character.values[x]);
    first = false;
  }
  return s + ">";
}

/// Serializable snapshot of a subcharacter table, used for golden files and round trips.
struct TableSummary {
  struct Orbit {
    std::uint64_t subgroup = 0;             // member bitset
    std::vector<std::uint32_t> character;   // values on subgroup members, in element order
    int orbit_size = 0;
    int stabilizer_order = 0;
    bool operator==(const Orbit&) const = default;
  };
  std::string group;
  int order = 0;
  std::vector<int> fiber;
  std::vector<Orbit> orbits;
  std::vector<std::pair<int, int>> strict_order;  // pairs o1 < o2

  bool operator==(const TableSummary&) const = default;
};

inline TableSummary summarize(const SubcharacterTable& t) {
  TableSummary s{t.group().name(), t.group().order(), t.fiber().invariants(), {}, {}};
  for (int o = 0; o < t.orbit_count(); ++o) {
    const auto& item = t.item(t.orbit_rep(o));
    TableSummary::Orbit orb{item.subgroup.members.bits(), {}, t.orbit_size(o), t.stabilizer_order(o)};
    item.subgroup.members.for_each([&](Element x) { orb.character.push_back(item.character.values[x]); });
    s.orbits.push_back(std::move(orb));
    for (int p = 0; p < t.orbit_count(); ++p)
      if (p != o && t.leq(o, p)) s.strict_order.emplace_back(o, p);
  }
  return s;
}

inline json to_json(const TableSummary& s) {
  json orbits = json::array();
  for (const auto& o : s.orbits)
    orbits.push_back({{"subgroup_bits", o.subgroup},
                      {"character", o.character},
                      {"orbit_size", o.orbit_size},
                      {"stabilizer_order", o.stabilizer_order}});
  json order = json::array();
  for (auto [a, b] : s.strict_order) order.push_back({a, b});
  return json{{"group", s.group}, {"order", s.order}, {"fiber", s.fiber}, {"orbits", orbits}, {"strict_order", order}};
}

inline TableSummary summary_from_json(const json& j) {
  try {
    TableSummary s;
    s.group = j.at("group").get<std::string>();
    s.order = j.at("order").get<int>();
    s.fiber = j.at("fiber").get<std::vector<int>>();
    for (const auto& o : j.at("orbits"))
      s.orbits.push_back({o.at("subgroup_bits").get<std::uint64_t>(), o.at("character").get<std::vector<std::uint32_t>>(),
                          o.at("orbit_size").get<int>(), o.at("stabilizer_order").get<int>()});
    for (const auto& p : j.at("strict_order")) s.strict_order.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return s;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad table JSON: ") + e.what());
  }
}

/// Full table document: summary plus human-readable orbit descriptors.
inline json table_to_json(const SubcharacterTable& t) {
  json j = to_json(summarize(t));
  json desc = json::array();
  for (int o = 0; o < t.orbit_count(); ++o) desc.push_back(orbit_descriptor(t, o));
  j["descriptors"] = desc;
  return j;
}

inline json species_map_to_json(const SpeciesMap& m) {
  json pairs = json::array();
  for (int o = 0; o < static_cast<int>(m.orbit_map.size()); ++o)
    pairs.push_back({orbit_descriptor(m.source->table(), o), orbit_descriptor(m.target->table(), m(o))});
  return pairs;
}

/// theta_S as generator lists, theta_K as character-value tables on subgroup generators.
inline json subchar_bijection_to_json(const SubcharBijection& b) {
  const auto& tg = b.source->table();
  const auto& th = b.target->table();
  auto gens_json = [](const SubcharacterTable& t, int s) {
    json a = json::array();
    for (Element x : t.subgroups().generators(s)) a.push_back(t.group().label(x));
    return a;
  };
  auto values_json = [](const SubcharacterTable& t, int item) {
    json a = json::array();
    for (Element x : t.subgroups().generators(t.item_subgroup(item))) a.push_back(t.fiber().format(t.item(item).character.values[x]));
    return a;
  };
  json theta_s = json::array(), theta_k = json::array();
  for (int s = 0; s < tg.subgroups().size(); ++s) {
    const int r = b.subgroup_map[s];
    theta_s.push_back({{"source", gens_json(tg, s)}, {"target", gens_json(th, r)}});
    json chars = json::array();
    for (int i = tg.first_item(s); i < tg.first_item(s + 1); ++i)
      chars.push_back({values_json(tg, i), values_json(th, b(i))});
    theta_k.push_back({{"source", gens_json(tg, s)}, {"target", gens_json(th, r)}, {"characters", chars}});
  }
  return json{{"theta_S", theta_s}, {"theta_K", theta_k}};
}

inline json suite_report_to_json(const SuiteReport& r) {
  json out = json::array();
  for (const auto& s : r) out.push_back({{"suite", s.name}, {"checks", s.checks}, {"failures", s.failures}});
  return out;
}

}  // namespace fibered::io
