#include "doctest.h"

#include <cmath>
#include <limits>

#include "json.hpp"

#include "cl12/cli/commands.hpp"
#include "cl12/cli/format.hpp"
#include "cl12/cli/parse.hpp"
#include "cl12/inverse.hpp"
#include "cl12/verify/generators.hpp"

using namespace cl12;
using namespace cl12::cli;
using nlohmann::json;

namespace {

Multivector mv(std::initializer_list<std::pair<int, double>> terms) {
  Multivector::Coeffs c{};
  for (const auto& [t, v] : terms) c[static_cast<std::size_t>(t)] += v;
  return Multivector(c);
}

Options json_opts() {
  Options o;
  o.json = true;
  return o;
}

}  // namespace

TEST_CASE("literal parsing") {
  CHECK(parse_literal("1+e1") == mv({{0, 1}, {1, 1}}));
  CHECK(parse_literal("-e7") == -Multivector::e(7));
  CHECK(parse_literal("  -e7") == -Multivector::e(7));
  CHECK(parse_literal("0.25 e1 - 0.25e2") == mv({{1, 0.25}, {2, -0.25}}));
  CHECK(parse_literal("2e3") == mv({{3, 2}}));
  CHECK(parse_literal("2 e3 + 1.5E+1") == mv({{0, 15}, {3, 2}}));
  CHECK(parse_literal("e1 + e1") == mv({{1, 2}}));
  CHECK(parse_literal("[1,0,0,0,0,0,0,-2]") == mv({{0, 1}, {7, -2}}));
  CHECK(parse_literal("0") == Multivector{});

  CHECK_THROWS_AS(parse_literal(""), ParseError);
  CHECK_THROWS_AS(parse_literal("e8"), ParseError);
  CHECK_THROWS_AS(parse_literal("1 +"), ParseError);
  CHECK_THROWS_AS(parse_literal("x"), ParseError);
  CHECK_THROWS_AS(parse_literal("2*e3"), ParseError);
  CHECK_THROWS_AS(parse_literal("[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_literal("1e999"), ParseError);
}

TEST_CASE("expression evaluation") {
  CHECK(evaluate_expression("e1*e2") == Multivector::e(3));
  CHECK(evaluate_expression("e1*e1") == Multivector::e(0));
  CHECK(norm2(evaluate_expression("(1+e2+e4) * inv(1+e2+e4)") - Multivector::e(0)) <= 1e-12);
  CHECK(norm2(evaluate_expression("pinv(e1+e2)") - mv({{1, 0.25}, {2, -0.25}})) <= 1e-12);
  CHECK(evaluate_expression("conj(1+e1+e7)") == mv({{0, 1}, {1, -1}, {7, 1}}));
  CHECK(evaluate_expression("prime(e6+e7)") == mv({{6, -1}, {7, -1}}));
  CHECK(evaluate_expression("cre(1-e1+e2+e3-e7)") == mv({{0, 1}, {7, -1}}));
  CHECK(evaluate_expression("cim(e7)") == Multivector{});
  CHECK(evaluate_expression("-(e1 - 2*e2)") == mv({{1, -1}, {2, 2}}));
  CHECK(evaluate_expression("2 * (e1 + e2) * 0.5") == mv({{1, 1}, {2, 1}}));

  CHECK_THROWS_AS(evaluate_expression("inv(e1+e2)"), SingularElement);
  CHECK_THROWS_AS(evaluate_expression("foo(e1)"), ParseError);
  CHECK_THROWS_AS(evaluate_expression("(e1"), ParseError);
  CHECK_THROWS_AS(evaluate_expression("e1 e2 )"), ParseError);
}

TEST_CASE("formatting") {
  CHECK(format_multivector(Multivector{}) == "0");
  CHECK(format_multivector(Multivector::e(5)) == "e5");
  CHECK(format_multivector(-Multivector::e(1)) == "-e1");
  CHECK(format_multivector(mv({{0, 0.25}, {1, 0.25}, {6, -0.25}, {7, -0.25}})) == "0.25 + 0.25 e1 - 0.25 e6 - 0.25 e7");
  CHECK(format_multivector(mv({{0, 1}, {3, 1e-20}})) == "1");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_complex({2, -1}) == "2-i");
  CHECK(format_complex({0, -1}) == "-i");
  CHECK(format_complex({0.5, 1.25}) == "0.5+1.25i");
  CHECK(format_complex({3, 1e-17}) == "3");
}

TEST_CASE("formatting round-trips through the parser") {
  verify::Rng rng = verify::trial_rng(17, 100, 0);
  for (int k = 0; k < 100; ++k) {
    Multivector::Coeffs c{};
    for (double& v : c) v = std::uniform_real_distribution<double>(-10.0, 10.0)(rng);
    if (k % 4 == 0) c[static_cast<std::size_t>(k % 8)] = 0.0;
    const Multivector a(c);
    const Multivector b = parse_literal(format_multivector(a));
    CHECK(norm2(a - b) <= 1e-10 * (1.0 + norm2(a)));
  }
}

TEST_CASE("eval command") {
  const CommandResult r = cmd_eval("(1+e2+e4) * inv(1+e2+e4)", {});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.out.rfind("1\n", 0) == 0);
  CHECK(cmd_eval("pinv(e1+e2)", {}).out.rfind("0.25 e1 - 0.25 e2\n", 0) == 0);
  CHECK(cmd_eval("e1*e1", {}).out.rfind("1\n", 0) == 0);

  const json j = json::parse(cmd_eval("1+e2+e4", json_opts()).out);
  CHECK(j["coeffs"] == json::array({1, 0, 1, 0, 1, 0, 0, 0}));
  CHECK(j["P"] == 9);

  const CommandResult bad = cmd_eval("e1 +", {});
  CHECK(bad.exit_code == kExitUsage);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("parse error") != std::string::npos);
  CHECK(cmd_eval("inv(e1+e2)", {}).exit_code == kExitDomain);
}

TEST_CASE("solve command") {
  const CommandResult r = cmd_solve(EquationKind::Axb, "1+e1", "e6+e7", "1+e1+e6+e7", {});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.out.find("solvable: yes\n") != std::string::npos);
  CHECK(r.out.find("particular: 0.25 + 0.25 e1 - 0.25 e6 - 0.25 e7\n") != std::string::npos);

  const CommandResult ax = cmd_solve(EquationKind::Ax, "e1+e2", std::nullopt, "e1+e2+e5+e6", {});
  CHECK(ax.out.find("particular: 0.5 + 0.5 e3 + 0.5 e4 + 0.5 e7\n") != std::string::npos);

  const CommandResult xb = cmd_solve(EquationKind::Xb, std::nullopt, "e0", "e5", {});
  CHECK(xb.out.find("particular: e5\n") != std::string::npos);
  CHECK(xb.out.find("dim: 0\n") != std::string::npos);

  const json j = json::parse(cmd_solve(EquationKind::Ax, "e1+e2", std::nullopt, "1", json_opts()).out);
  CHECK(j["solvable"] == false);
  CHECK(j["particular"].is_null());
  CHECK(j["kind"] == "ax");

  Options strict;
  strict.strict = true;
  CHECK(cmd_solve(EquationKind::Ax, "e1+e2", std::nullopt, "1", strict).exit_code == kExitDomain);
  CHECK(cmd_solve(EquationKind::Axb, "1", std::nullopt, "1", {}).exit_code == kExitUsage);
}

TEST_CASE("similar command") {
  const CommandResult r = cmd_similar("e2", "e6", {});
  CHECK(r.out == "similar: yes\nreason: InvariantsMatch\nwitness: e2 + e6\n");
  const CommandResult n = cmd_similar("e7", "-e7", {});
  CHECK(n.exit_code == kExitOk);
  CHECK(n.out == "similar: no\nreason: CreMismatch\n");
  CHECK(cmd_similar("1+e1", "1+e1", {}).out.find("witness: 1\n") != std::string::npos);

  const json j = json::parse(cmd_similar("e2", "e6", json_opts()).out);
  CHECK(j["similar"] == true);
  CHECK(j["candidate"] == 0);
  CHECK(j["witness"]["coeffs"] == json::array({0, 0, 1, 0, 0, 0, 1, 0}));
}

TEST_CASE("rep, eig and det commands") {
  const CommandResult rep = cmd_rep("e0", "left", {});
  CHECK(rep.out.rfind("1 0 0 0 0 0 0 0\n0 1 0", 0) == 0);
  const json rj = json::parse(cmd_rep("e1", "right", json_opts()).out);
  CHECK(rj["matrix"].size() == 8);
  CHECK(rj["matrix"][1][0] == 1);
  CHECK(cmd_rep("e0", "up", {}).exit_code == kExitUsage);

  CHECK(cmd_eig("1-e1+e2+e3-e7", {}).out == "-i, i, 2-i, 2+i (each ×2)\n");
  const json ej = json::parse(cmd_eig("e7", json_opts()).out);
  CHECK(ej["multiplicity"] == 2);
  CHECK(ej["eigenvalues"][0] == json::array({0, -1}));

  CHECK(cmd_det("1+e2+e4", {}).out == "81 (= P(a)^2, P(a)=9)\n");
  const json dj = json::parse(cmd_det("e1+e2", json_opts()).out);
  CHECK(dj["P"] == 0);
}

TEST_CASE("verify command") {
  const CommandResult ok = cmd_verify(5, true, {});
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.out.find("all suites passed") != std::string::npos);
  CHECK(cmd_verify(0, true, {}).exit_code == kExitUsage);
  const json j = json::parse(cmd_verify(3, false, json_opts()).out);
  CHECK(j["passed"] == true);
  CHECK(j["suites"].size() == 9);
}
