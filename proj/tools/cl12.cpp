// cl12: command-line front end for the Cl(1,2) library.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cl12/cli/commands.hpp"
#include "cl12/cli/parse.hpp"

namespace {

using namespace cl12::cli;

// CLI11 reads any argument starting with '-' as an option name, so a
// negative literal such as "-e7" is shielded with a leading space, which
// the literal parser skips.
std::vector<std::string> shield_negative_literals(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string s = argv[i];
    if (s.size() > 1 && s[0] == '-' && s[1] != '-' && s != "-h") {
      try {
        parse_literal(s);
        s.insert(s.begin(), ' ');
      } catch (const ParseError&) {
      }
    }
    args.push_back(std::move(s));
  }
  return args;  // reversed, as CLI::App::parse(std::vector) expects
}

int finish(const CommandResult& r) {
  std::fputs(r.out.c_str(), stdout);
  std::fputs(r.err.c_str(), stderr);
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford algebra Cl(1,2): products, inverses, Moore-Penrose inverses, axb = d, similarity", "cl12"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_option("--tol", opt.tol, "Singularity / comparison tolerance")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for randomized steps")->capture_default_str();
  app.add_flag("--strict", opt.strict, "Exit 1 when an equation has no solution");

  std::string expr;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression (*, +, -, conj, prime, cre, cim, inv, pinv)");
  eval->add_option("expr", expr, "Expression")->required();

  std::string kind;
  std::optional<std::string> a_lit, b_lit, d_lit;
  auto* solve = app.add_subcommand("solve", "Solve a x b = d, a x = d or x b = d");
  solve->add_option("kind", kind, "axb | ax | xb")->required()->check(CLI::IsMember({"axb", "ax", "xb"}));
  solve->add_option("--a", a_lit, "Left coefficient a");
  solve->add_option("--b", b_lit, "Right coefficient b");
  solve->add_option("--d", d_lit, "Right-hand side d");

  std::string sim_a, sim_b;
  auto* similar = app.add_subcommand("similar", "Decide similarity and print a witness q with q a = b q");
  similar->add_option("a", sim_a)->required();
  similar->add_option("b", sim_b)->required();

  std::string rep_a, side = "left";
  auto* rep = app.add_subcommand("rep", "Print the 8x8 left or right representation matrix");
  rep->add_option("a", rep_a)->required();
  rep->add_option("--side", side, "left | right")->check(CLI::IsMember({"left", "right"}))->capture_default_str();

  std::string eig_a;
  auto* eig = app.add_subcommand("eig", "Eigenvalues of L(a)");
  eig->add_option("a", eig_a)->required();

  std::string det_a;
  auto* det = app.add_subcommand("det", "det L(a) next to P(a)^2");
  det->add_option("a", det_a)->required();

  int trials = 100;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "Run the oracle cross-check suites");
  verify->add_option("--trials", trials, "Trials per suite")->capture_default_str();
  verify->add_flag("--serial", serial, "Use the serial reference loop instead of OpenMP");

  try {
    app.parse(shield_negative_literals(argc, argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (eval->parsed()) return finish(cmd_eval(expr, opt));
  if (solve->parsed()) {
    const EquationKind k = kind == "axb" ? EquationKind::Axb : kind == "ax" ? EquationKind::Ax : EquationKind::Xb;
    return finish(cmd_solve(k, a_lit, b_lit, d_lit, opt));
  }
  if (similar->parsed()) return finish(cmd_similar(sim_a, sim_b, opt));
  if (rep->parsed()) return finish(cmd_rep(rep_a, side, opt));
  if (eig->parsed()) return finish(cmd_eig(eig_a, opt));
  if (det->parsed()) return finish(cmd_det(det_a, opt));
  if (verify->parsed()) return finish(cmd_verify(trials, !serial, opt));
  return kExitUsage;
}
