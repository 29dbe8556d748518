// Runs every acceptance criterion over the built-in corpus and prints one PASS/FAIL line each.

#include <chrono>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "oracles.hpp"

using namespace fibered;

namespace {

const std::vector<std::string> kFibers = {"C1", "C2", "C3", "C4", "C6", "auto"};

struct Instance {
  std::string group;
  std::string fiber;
  std::unique_ptr<BurnsideRing> ring;
};

std::vector<Instance>& corpus() {
  static std::vector<Instance> all = [] {
    std::vector<Instance> out;
    for (const auto& name : catalog::names())
      for (const auto& f : kFibers) {
        auto g = catalog::group(name);
        auto a = parse_fiber(f, g.exponent());
        out.push_back({name, f, std::make_unique<BurnsideRing>(std::move(g), std::move(a))});
      }
    return out;
  }();
  return all;
}

struct Check {
  std::ostringstream log;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) log << what;
    ok &= cond;
  }
};

bool suite_ok(Check& c, const SuiteReport& r, const Instance& in) {
  for (const auto& s : r) c.expect(s.passed(), in.group + "/" + in.fiber + ": " + s.name);
  return all_passed(r);
}

std::string run_cli(const cli::JobConfig& cfg, int& code) {
  std::ostringstream out, err;
  code = cli::run(cfg, out, err);
  return out.str();
}

FiniteGroup from_json(const char* text) { return build_group(io::group_spec_from_json(io::json::parse(text))); }

FiniteGroup s3_alt() { return from_json(R"({"name": "S3alt", "perm_gens": [[2,1,3],[1,3,2]]})"); }

/// D8 as a bare multiplication table, with elements relabeled in reverse order.
FiniteGroup d8_cayley() {
  const auto d8 = catalog::group("D8");
  const int n = d8.order();
  GroupSpec spec;
  spec.name = "D8cayley";
  spec.cayley.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) spec.cayley[n - 1 - x][n - 1 - y] = n - 1 - d8.mul(x, y);
  return build_group(spec);
}

void criterion_1(Check& c) {
  for (const auto& name : catalog::names()) {
    const auto g = catalog::group(name);
    const auto subs = subgroups(g);
    std::set<std::uint64_t> got;
    for (const auto& s : subs.all()) got.insert(s.members.bits());
    c.expect(got == oracle::all_subgroups(g), name + ": subgroup lattice differs from oracle");
  }
  for (const auto& in : corpus()) suite_ok(c, construction_suite(*in.ring), in);
}

void criterion_2(Check& c) {
  auto rank = [](const char* g, int n) { return build_table(catalog::group(g), FiberGroup({n})).orbit_count(); };
  c.expect(rank("C4", 2) == 5, "rank C4/C2");
  c.expect(rank("C2xC2", 2) == 11, "rank C2xC2/C2");
  const auto t = build_table(catalog::group("C4"), FiberGroup({5}));
  c.expect(t.orbit_count() == 3 && static_cast<int>(t.subgroups().classes().size()) == 3, "rank C4/C5");
}

void criterion_3(Check& c) {
  for (const auto& in : corpus()) {
    suite_ok(c, mu_lemma_suite(*in.ring, 11, 100), in);
    suite_ok(c, marks_lemma_suite(*in.ring, 12, 100), in);
  }
}

void criterion_4(Check& c) {
  for (const auto& in : corpus()) suite_ok(c, ring_axiom_suite(*in.ring), in);
}

void criterion_5(Check& c) {
  for (const auto& in : corpus()) suite_ok(c, ghost_suite(*in.ring), in);
}

void criterion_6(Check& c) {
  for (auto [g, h, f] : {std::tuple{"C4", "C2xC2", "C2"}, std::tuple{"C6", "S3", "C1"}}) {
    cli::JobConfig cfg;
    cfg.command = "iso";
    cfg.group = g;
    cfg.group2 = h;
    cfg.fiber = f;
    int code = -1;
    const auto out = run_cli(cfg, code);
    c.expect(code == 0 && out == "null\n", std::string(g) + " vs " + h + ": expected null");
  }
}

void check_found(Check& c, const BurnsideRing& g, const BurnsideRing& h, const std::string& what) {
  const auto m = find_species_iso(g, h);
  c.expect(m.has_value(), what + ": no map found");
  if (!m) return;
  c.expect(verify_condition_2(*m), what + ": condition 2");
  c.expect(mark_matrices_equal(*m), what + ": mark matrices");
  const auto b = try_lift(*m);
  c.expect(b.has_value(), what + ": no lift");
  if (!b) return;
  c.expect(verify_condition_3(*b), what + ": condition 3");
  c.expect(verify_condition_4(*b), what + ": condition 4");
  c.expect(diagram_commutes(*m, build_ghost_iso(*b)), what + ": diagram");
}

void criterion_7(Check& c) {
  std::vector<std::pair<FiniteGroup, FiniteGroup>> pairs;
  pairs.emplace_back(catalog::group("S3"), s3_alt());
  pairs.emplace_back(catalog::group("D8"), d8_cayley());
  for (const auto& [x, y] : pairs) {
    const auto a = parse_fiber("auto", std::lcm(x.exponent(), y.exponent()));
    const BurnsideRing g(x, a), h(y, a);
    check_found(c, g, h, x.name() + " vs " + y.name());
  }
}

void criterion_8(Check& c) {
  std::vector<const Instance*> small;
  for (const auto& in : corpus())
    if (in.ring->table().orbit_count() <= 6) small.push_back(&in);
  for (const auto* a : small)
    for (const auto* b : small) {
      if (a->ring->table().fiber() != b->ring->table().fiber()) continue;
      if (a->ring->table().orbit_count() != b->ring->table().orbit_count()) continue;
      const auto scan = scan_all_bijections(*a->ring, *b->ring);
      const std::string what = a->group + " vs " + b->group + " over " + a->ring->table().fiber().name();
      c.expect(scan.consistent(), what + ": conditions disagree");
      const bool found = find_species_iso(*a->ring, *b->ring).has_value();
      c.expect(found == (scan.pass_2 > 0), what + ": search and scan disagree");
      if (a == b) c.expect(scan.pass_2 > 0, what + ": identity missing");
    }
}

void criterion_9(Check& c) {
  auto check_all = [&](const BurnsideRing& g, const BurnsideRing& h, const std::string& what) {
    for (const auto& m : find_species_isos(g, h, SearchOptions{true, 50})) {
      const auto b = try_lift(m);
      c.expect(b.has_value(), what + ": no lift");
      if (!b) continue;
      for (const auto& p : check_found_iso_properties(m, *b).checks)
        c.expect(p.passed || !p.asserted, what + ": " + p.name);
    }
  };
  for (const auto& in : corpus()) check_all(*in.ring, *in.ring, in.group + "/" + in.fiber);
  const auto a = parse_fiber("auto", 6);
  const BurnsideRing g(catalog::group("S3"), a), h(s3_alt(), a);
  check_all(g, h, "S3 vs S3alt");
  const auto a8 = parse_fiber("auto", 4);
  const BurnsideRing d(catalog::group("D8"), a8), dc(d8_cayley(), a8);
  check_all(d, dc, "D8 vs D8cayley");
}

void criterion_10(Check& c) {
  for (const auto& cmd : cli::commands())
    for (const char* group : {"S3", "D8", "A4"})
      for (const char* fmt : {"json", "tsv"}) {
        cli::JobConfig cfg;
        cfg.command = cmd;
        cfg.group = group;
        cfg.group2 = "S3";
        cfg.format = fmt;
        if (cmd == "mu") cfg.args = {1, 1, 0};
        if (cmd == "gamma") cfg.args = {0, 1};
        int c1 = -1, c2 = -1;
        const auto first = run_cli(cfg, c1), second = run_cli(cfg, c2);
        c.expect(c1 == c2 && first == second && !first.empty(), cmd + " on " + group + " is not stable");
      }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "construction sanity", 10, criterion_1},
      {2, "rank checks", 1, criterion_2},
      {3, "multiplication and marks lemma suites", 120, criterion_3},
      {4, "ring axioms", 120, criterion_4},
      {5, "mark morphism", 300, criterion_5},
      {6, "species search, negative cases", 1, criterion_6},
      {7, "species search, positive cases", 30, criterion_7},
      {8, "theorem-equivalence scan", 120, criterion_8},
      {9, "proved consequences on found maps", 60, criterion_9},
      {10, "determinism", 1, criterion_10},
  };

  // Building the corpus is shared setup, not part of any single criterion's budget.
  corpus();

  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(secs <= cr.limit_s, "time limit exceeded");
    std::cout << (check.ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " (" << secs << " s)";
    if (!check.ok) std::cout << " -- " << check.log.str();
    std::cout << '\n';
    failed += !check.ok;
  }
  return failed == 0 ? 0 : 1;
}
