#include <iostream>

#include <CLI11.hpp>

#include "fibered/cli.hpp"

int main(int argc, char** argv) {
  fibered::cli::JobConfig cfg;
  CLI::App app{"Fibered Burnside rings and species isomorphisms"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--group", cfg.group, "catalog name or JSON group file");
  app.add_option("--group2", cfg.group2, "second group for iso");
  app.add_option("--fiber", cfg.fiber, "fiber spec: auto or C<n>(xC<m>)*");
  app.add_option("--format", cfg.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--all-isos", cfg.all_isos, "enumerate every species isomorphism");
  app.add_flag("--lift-theta", cfg.lift_theta, "lift found maps and check all conditions");
  app.add_option("--max-order", cfg.max_order, "group order cap (at most 64)");
  app.add_option("--seed", cfg.seed, "sampling seed for verify");

  for (const auto& name : fibered::cli::commands()) {
    auto* sub = app.add_subcommand(name);
    if (name == "mu") sub->add_option("orbits", cfg.args, "orbit ids k l t")->expected(3);
    if (name == "gamma") sub->add_option("orbits", cfg.args, "orbit ids k l")->expected(2);
    sub->callback([&cfg, name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fibered::cli::kInputError;
  }
  return fibered::cli::run(cfg, std::cout, std::cerr);
}
