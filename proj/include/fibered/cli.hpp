#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "io.hpp"

namespace fibered::cli {

using io::json;

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> all = {"rank", "table", "marks", "multable", "mu",
                                               "gamma", "ghost-check", "verify", "iso"};
  return all;
}

struct JobConfig {
  std::string command;
  std::string group;
  std::string group2;
  std::string fiber = "auto";
  std::string format = "json";
  bool all_isos = false;
  bool lift_theta = false;
  int max_order = kDefaultOrderCap;
  std::uint64_t seed = 1;  // sampling seed for `verify`
  std::vector<int> args;  // orbit ids for `mu` and `gamma`
};

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

namespace detail {

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

inline int check_orbit(const SubcharacterTable& t, int o) {
  if (o < 0 || o >= t.orbit_count())
    throw InputError("orbit id " + std::to_string(o) + " out of range [0, " + std::to_string(t.orbit_count()) + ")");
  return o;
}

inline void emit_report(std::ostream& out, const JobConfig& cfg, const SuiteReport& report, const json& head) {
  if (cfg.format == "tsv") {
    out << "suite\tchecks\tfailures\n";
    for (const auto& s : report) out << s.name << '\t' << s.checks << '\t' << s.failures << '\n';
  } else {
    json j = head;
    j["suites"] = io::suite_report_to_json(report);
    j["passed"] = all_passed(report);
    emit(out, j);
  }
}

inline int run_single(const JobConfig& cfg, std::ostream& out) {
  FiniteGroup g = io::load_group(cfg.group, cfg.max_order);
  FiberGroup a = parse_fiber(cfg.fiber, g.exponent());
  const std::string fiber_name = a.name();
  const std::string group_name = g.name();
  BurnsideRing ring(std::move(g), std::move(a));
  const auto& t = ring.table();
  const json head{{"group", group_name}, {"fiber", fiber_name}};
  const bool tsv = cfg.format == "tsv";

  if (cfg.command == "rank") {
    if (tsv) {
      out << "rank\t" << t.orbit_count() << '\n';
      out << "orbit\tsubgroup_order\torbit_size\tdescriptor\n";
      for (int o = 0; o < t.orbit_count(); ++o)
        out << o << '\t' << t.orbit_subgroup_order(o) << '\t' << t.orbit_size(o) << '\t' << io::orbit_label(t, o) << '\n';
    } else {
      json j = head;
      j["rank"] = t.orbit_count();
      json orbits = json::array();
      for (int o = 0; o < t.orbit_count(); ++o) orbits.push_back(io::orbit_descriptor(t, o));
      j["orbits"] = orbits;
      emit(out, j);
    }
    return kOk;
  }
  if (cfg.command == "table") {
    if (tsv) {
      out << "orbit\tsubgroup_order\torbit_size\tstabilizer_order\tdescriptor\tabove\n";
      for (int o = 0; o < t.orbit_count(); ++o) {
        out << o << '\t' << t.orbit_subgroup_order(o) << '\t' << t.orbit_size(o) << '\t' << t.stabilizer_order(o) << '\t'
            << io::orbit_label(t, o) << '\t';
        bool first = true;
        for (int p = 0; p < t.orbit_count(); ++p)
          if (p != o && t.leq(o, p)) {
            out << (first ? "" : ",") << p;
            first = false;
          }
        out << '\n';
      }
    } else {
      emit(out, io::table_to_json(t));
    }
    return kOk;
  }
  if (cfg.command == "marks") {
    const auto& m = ring.marks();
    if (tsv) {
      out << "orbit";
      for (int o : m.order) out << '\t' << o;
      out << '\n';
      for (int i = 0; i < m.size(); ++i) {
        out << m.order[i];
        for (int j = 0; j < m.size(); ++j) out << '\t' << m.at(i, j);
        out << '\n';
      }
    } else {
      json j = head;
      j["order"] = m.order;
      json labels = json::array(), rows = json::array();
      for (int o : m.order) labels.push_back(io::orbit_label(t, o));
      for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.size(); ++k) row.push_back(m.at(i, k));
        rows.push_back(row);
      }
      j["labels"] = labels;
      j["matrix"] = rows;
      emit(out, j);
    }
    return kOk;
  }
  if (cfg.command == "multable") {
    const auto& mu = ring.mu();
    json triples = json::array();
    if (tsv) out << "k\tl\tt\tmu\n";
    for (int x = 0; x < t.orbit_count(); ++x)
      for (int y = 0; y < t.orbit_count(); ++y)
        for (auto [z, c] : mu.row(x, y)) {
          if (tsv) out << x << '\t' << y << '\t' << z << '\t' << c << '\n';
          else triples.push_back({x, y, z, c});
        }
    if (!tsv) {
      json j = head;
      j["rank"] = t.orbit_count();
      j["triples"] = triples;
      emit(out, j);
    }
    return kOk;
  }
  if (cfg.command == "mu" || cfg.command == "gamma") {
    const std::size_t need = cfg.command == "mu" ? 3 : 2;
    if (cfg.args.size() != need) throw InputError(cfg.command + " needs " + std::to_string(need) + " orbit ids");
    for (int o : cfg.args) check_orbit(t, o);
    const Coefficient value = cfg.command == "mu" ? mu(t, cfg.args[0], cfg.args[1], cfg.args[2])
                                                  : gamma_items(t, t.orbit_rep(cfg.args[0]), t.orbit_rep(cfg.args[1]));
    if (tsv) {
      out << value << '\n';
    } else {
      json j = head;
      j["orbits"] = cfg.args;
      j[cfg.command] = value;
      emit(out, j);
    }
    return kOk;
  }
  if (cfg.command == "ghost-check") {
    auto report = ghost_suite(ring);
    emit_report(out, cfg, report, head);
    return all_passed(report) ? kOk : kVerificationFailed;
  }
  if (cfg.command == "verify") {
    auto report = verify_all(ring, cfg.seed);
    auto ghost = ghost_suite(ring);
    report.insert(report.end(), ghost.begin(), ghost.end());
    emit_report(out, cfg, report, head);
    return all_passed(report) ? kOk : kVerificationFailed;
  }
  throw InputError("unknown command '" + cfg.command + "'");
}

inline int run_iso(const JobConfig& cfg, std::ostream& out) {
  if (cfg.group2.empty()) throw InputError("iso needs --group2");
  FiniteGroup g = io::load_group(cfg.group, cfg.max_order);
  FiniteGroup h = io::load_group(cfg.group2, cfg.max_order);
  const int context = std::lcm(g.exponent(), h.exponent());
  FiberGroup a = parse_fiber(cfg.fiber, context);
  BurnsideRing rg(std::move(g), a);
  BurnsideRing rh(std::move(h), a);
  const bool tsv = cfg.format == "tsv";

  std::vector<SpeciesMap> maps;
  if (cfg.all_isos) {
    maps = find_species_isos(rg, rh);
  } else if (auto m = find_species_iso(rg, rh)) {
    maps.push_back(*m);
  }

  bool verified = true;
  json docs = json::array();
  for (const auto& m : maps) {
    json doc = io::species_map_to_json(m);
    if (cfg.lift_theta) {
      const auto bij = lift_to_subchar_bijection(m);
      const auto ghost = build_ghost_iso(bij);
      const auto props = check_found_iso_properties(m, bij);
      json conditions{{"condition_2", verify_condition_2(m)},
                      {"condition_3", verify_condition_3(bij)},
                      {"condition_4", verify_condition_4(bij)},
                      {"mark_matrices_equal", mark_matrices_equal(m)},
                      {"diagram_commutes", diagram_commutes(m, ghost)},
                      {"properties", props.ok()}};
      for (const auto& [k, v] : conditions.items()) verified &= v.get<bool>();
      json plist = json::array();
      for (const auto& c : props.checks) plist.push_back({{"check", c.name}, {"passed", c.passed}, {"asserted", c.asserted}});
      doc = json{{"map", doc}, {"theta", io::subchar_bijection_to_json(bij)}, {"conditions", conditions}, {"properties", plist}};
    }
    docs.push_back(doc);
  }

  if (tsv) {
    if (maps.empty() && !cfg.all_isos) out << "null\n";
    for (std::size_t k = 0; k < maps.size(); ++k) {
      if (cfg.all_isos) out << "# map " << k << '\n';
      out << "source\ttarget\n";
      for (int o = 0; o < static_cast<int>(maps[k].orbit_map.size()); ++o) out << o << '\t' << maps[k](o) << '\n';
    }
  } else if (cfg.all_isos) {
    emit(out, docs);
  } else {
    emit(out, docs.empty() ? json(nullptr) : docs.front());
  }
  return verified ? kOk : kVerificationFailed;
}

}  // namespace detail

/// Runs one job; errors go to `err` and map to exit code 2.
inline int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.group.empty()) throw InputError("--group is required");
    if (cfg.format != "json" && cfg.format != "tsv") throw InputError("--format must be json or tsv");
    if (cfg.max_order < 1 || cfg.max_order > kHardOrderCap) throw InputError("--max-order must lie in [1, 64]");
    if (cfg.command == "iso") return detail::run_iso(cfg, out);
    return detail::run_single(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace fibered::cli
