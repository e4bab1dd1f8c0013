// bht — exact solvers and numerical verification for biharmonic
// Clifford-type tori in spheres and complex projective space.

#include "bht/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<double> parse_radii(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split_list(s)) out.push_back(std::stod(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biharmonic Clifford-type tori: exact solvers, oracles, tables"};
  app.require_subcommand(1);

  bht::SolveSpec solve;
  bht::VerifySpec verify;
  bht::TableSpec table;
  bht::StabilitySpec stability;
  std::string verify_radii, verify_oracles;

  auto* solve_cmd = app.add_subcommand("solve", "solve a family for exact radii");
  solve_cmd->add_option("--family", solve.family)->required();
  solve_cmd->add_option("--n", solve.n)->required();
  solve_cmd->add_option("--p", solve.p);
  solve_cmd->add_option("--q", solve.q);
  solve_cmd->add_option("--branch", solve.branch)->check(CLI::IsMember({"plus", "minus"}));
  solve_cmd->add_option("--format", solve.format)->check(CLI::IsMember({"json", "csv", "md"}));

  auto* verify_cmd = app.add_subcommand("verify", "verify biharmonicity with seeded oracles");
  verify_cmd->add_option("--family", verify.family)->required();
  verify_cmd->add_option("--n", verify.n)->required();
  verify_cmd->add_option("--p", verify.p);
  verify_cmd->add_option("--q", verify.q);
  verify_cmd->add_option("--radii", verify_radii, "comma-separated radii a_i");
  verify_cmd->add_option("--oracle", verify_oracles, "comma-separated: algebraic,fd-sphere,fd-cpn");
  verify_cmd->add_option("--branch", verify.branch)->check(CLI::IsMember({"plus", "minus"}));
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--samples", verify.samples);
  verify_cmd->add_option("--tolerance", verify.tolerance);
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"json", "csv", "md"}));

  auto* table_cmd = app.add_subcommand("table", "reproduce and adjudicate a stored radii table");
  table_cmd->add_option("id", table.id)->required();
  table_cmd->add_option("--seed", table.seed);
  table_cmd->add_option("--samples", table.samples);
  table_cmd->add_option("--tolerance", table.tolerance);
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"json", "csv", "md"}));

  auto* stability_cmd = app.add_subcommand("stability", "second variation in the H direction");
  stability_cmd->add_option("--n", stability.n)->required();
  stability_cmd->add_option("--p", stability.p)->required();
  stability_cmd->add_option("--q", stability.q)->required();
  stability_cmd->add_option("--branch", stability.branch)
      ->check(CLI::IsMember({"plus", "minus"}));
  stability_cmd->add_option("--seed", stability.seed);
  stability_cmd->add_option("--format", stability.format)
      ->check(CLI::IsMember({"json", "csv", "md"}));

  CLI11_PARSE(app, argc, argv);

  bht::CommandResult result;
  if (solve_cmd->parsed()) {
    result = bht::cmd_solve(solve);
  } else if (verify_cmd->parsed()) {
    if (!verify_radii.empty()) verify.radii = parse_radii(verify_radii);
    if (!verify_oracles.empty()) verify.oracles = split_list(verify_oracles);
    result = bht::cmd_verify(verify);
  } else if (table_cmd->parsed()) {
    result = bht::cmd_table(table);
  } else {
    result = bht::cmd_stability(stability);
  }
  std::fputs(result.output.c_str(), stdout);
  return result.exit_code;
}
