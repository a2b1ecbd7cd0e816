#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "foliate/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Gauss blowup iteration and the base-(r+2) graded ring of a singular foliation"};
  app.require_subcommand(1);

  std::size_t max_steps = 0;
  std::uint32_t degree_bound = 0;
  std::uint64_t seed = 0;
  bool audit = false;
  std::string out_path;
  std::vector<std::string> args;

  auto add_flags = [&](CLI::App* sub) {
    sub->add_option("--max-steps", max_steps, "Test stabilization for t = 0..N")->check(CLI::Range(1, 64));
    sub->add_option("--degree-bound", degree_bound, "Largest T-degree in the ring table")->check(CLI::Range(0, 4096));
    sub->add_flag("--audit", audit, "Recompute and cross-check every stored ideal");
    sub->add_option("--out", out_path, "Write the key=value sidecar here");
    sub->add_option("--seed", seed, "Random seed for property runs");
  };

  struct Command {
    const char* name;
    const char* help;
    const char* args;
    int min_args;
    int max_args;
  };
  const Command commands[] = {
      {"resolve", "Iterate the Gauss map and decide stabilization", "PROBLEM", 1, 1},
      {"ring", "Tabulate the monomials of R inside K[T]", "PROBLEM", 1, 1},
      {"toric", "Check whether blowing up a monomial ideal can resolve the foliation", "PROBLEM", 1, 1},
      {"wcheck", "Check homogeneity of the w-form on random instances", "PROBLEM", 0, 1},
      {"divisor", "Verify X_i = (r+2) X_(i-1) with K_i := K_(i-1)", "R I", 2, 2},
      {"section", "Compare X_0^(r+2) with X_1 for a space of sections X", "PROBLEM", 1, 1},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    auto* opt = sub->add_option("args", args, c.args);
    opt->expected(c.min_args, c.max_args);
    if (c.min_args > 0) opt->required();
    add_flags(sub);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : foliate::kExitInputError;
  }

  std::string name;
  for (auto* sub : subs) {
    if (sub->parsed()) name = sub->get_name();
  }
  CLI::App* sub = app.get_subcommand(name);
  foliate::CommandOptions options;
  if (sub->count("--max-steps")) options.max_steps = max_steps;
  if (sub->count("--degree-bound")) options.degree_bound = degree_bound;
  if (sub->count("--seed")) options.seed = seed;
  options.audit = audit;

  const foliate::Report rep = foliate::run_command(name, args, options);
  (rep.human.rfind("error: ", 0) == 0 ? std::cerr : std::cout)
      << rep.human;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return foliate::kExitInputError;
    }
    out << rep.sidecar();
  }
  return rep.exit_code;
}
