#include "cl12/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "cl12/cli/format.hpp"
#include "cl12/cli/parse.hpp"
#include "cl12/inverse.hpp"
#include "cl12/matrix_rep.hpp"
#include "cl12/similarity.hpp"
#include "cl12/solver.hpp"
#include "cl12/verify/suites.hpp"

namespace cl12::cli {

namespace {

using nlohmann::json;

CommandResult emit(const Options& opt, const std::string& text, const json& j, int code = kExitOk) {
  CommandResult r;
  r.exit_code = code;
  r.out = opt.json ? j.dump() + "\n" : text;
  return r;
}

CommandResult error(int code, const std::string& message) {
  CommandResult r;
  r.exit_code = code;
  r.err = "error: " + message + "\n";
  return r;
}

// Maps parse and domain failures to exit codes.
CommandResult guarded(const std::function<CommandResult()>& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return error(kExitUsage, std::string("parse error: ") + e.what());
  } catch (const SingularElement& e) {
    return error(kExitDomain, e.what());
  } catch (const std::invalid_argument& e) {
    return error(kExitUsage, e.what());
  }
}

std::string line(const std::string& key, const std::string& value) { return key + ": " + value + "\n"; }

}  // namespace

CommandResult cmd_eval(const std::string& expr, const Options& opt) {
  return guarded([&] {
    const Multivector v = evaluate_expression(expr, opt.tol);
    const Functionals f = functionals(v);
    std::string text = format_multivector(v) + "\n";
    text += "N = " + format_number(f.N) + "  T = " + format_number(f.T) + "  P = " + format_number(f.P) + "\n";
    return emit(opt, text, multivector_json(v));
  });
}

CommandResult cmd_solve(EquationKind kind, const std::optional<std::string>& a, const std::optional<std::string>& b,
                        const std::optional<std::string>& d, const Options& opt) {
  return guarded([&] {
    const bool need_a = kind != EquationKind::Xb;
    const bool need_b = kind != EquationKind::Ax;
    if ((need_a && !a) || (need_b && !b) || !d) return error(kExitUsage, "missing --a, --b or --d for this equation");

    const Multivector one = Multivector::scalar(1.0);
    const Multivector am = need_a ? parse_literal(*a) : one;
    const Multivector bm = need_b ? parse_literal(*b) : one;
    const Multivector dm = parse_literal(*d);
    const SolutionSet s = solve_axb(am, bm, dm, opt.tol);

    std::string text = line("solvable", s.solvable ? "yes" : "no");
    if (s.particular) text += line("particular", format_multivector(*s.particular));
    text += line("dim", std::to_string(s.dim));
    text += "hom_basis:\n";
    for (const Multivector& h : s.hom_basis) text += "  " + format_multivector(h) + "\n";
    text += line("residual", format_number(s.residual));

    static const char* const kinds[] = {"axb", "ax", "xb"};
    json j = {{"kind", kinds[static_cast<int>(kind)]},
              {"solvable", s.solvable},
              {"particular", s.particular ? multivector_json(*s.particular) : json(nullptr)},
              {"dim", s.dim},
              {"residual", round12(s.residual)}};
    json basis = json::array();
    for (const Multivector& h : s.hom_basis) basis.push_back(multivector_json(h));
    j["hom_basis"] = basis;
    return emit(opt, text, j, (!s.solvable && opt.strict) ? kExitDomain : kExitOk);
  });
}

CommandResult cmd_similar(const std::string& a, const std::string& b, const Options& opt) {
  return guarded([&] {
    const Multivector am = parse_literal(a);
    const Multivector bm = parse_literal(b);
    const SimilarityResult r = is_similar(am, bm, opt.tol, opt.seed);

    if (r.similar) {
      const Multivector& q = *r.witness;
      const double scale = 1.0 + norm2(q) * std::max(norm2(am), norm2(bm));
      if (is_singular(q, opt.tol) || norm2(q * am - bm * q) > opt.tol * scale)
        return error(kExitDomain, "witness failed the check q a = b q");
    }

    std::string text = line("similar", r.similar ? "yes" : "no");
    text += line("reason", std::string(to_string(r.reason)));
    if (r.witness) text += line("witness", format_multivector(*r.witness));

    json j = {{"similar", r.similar},
              {"reason", std::string(to_string(r.reason))},
              {"witness", r.witness ? multivector_json(*r.witness) : json(nullptr)},
              {"candidate", r.candidate ? json(*r.candidate) : json(nullptr)}};
    return emit(opt, text, j);
  });
}

CommandResult cmd_rep(const std::string& a, const std::string& side, const Options& opt) {
  return guarded([&] {
    if (side != "left" && side != "right") return error(kExitUsage, "--side must be left or right");
    const Multivector am = parse_literal(a);
    const Mat8 m = side == "left" ? left_matrix(am) : right_matrix(am);
    json rows = json::array();
    for (std::size_t i = 0; i < 8; ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < 8; ++k) row.push_back(round12(m(i, k)));
      rows.push_back(row);
    }
    return emit(opt, format_matrix(m), {{"side", side}, {"matrix", rows}});
  });
}

CommandResult cmd_eig(const std::string& a, const Options& opt) {
  return guarded([&] {
    const EigenSpectrum spectrum = eigenvalues(parse_literal(a));
    std::string text;
    json values = json::array();
    for (std::size_t k = 0; k < spectrum.values.size(); ++k) {
      text += (k ? ", " : "") + format_complex(spectrum.values[k]);
      values.push_back({round12(spectrum.values[k].real()), round12(spectrum.values[k].imag())});
    }
    text += " (each ×" + std::to_string(EigenSpectrum::multiplicity) + ")\n";
    return emit(opt, text, {{"eigenvalues", values}, {"multiplicity", EigenSpectrum::multiplicity}});
  });
}

CommandResult cmd_det(const std::string& a, const Options& opt) {
  return guarded([&] {
    const Multivector am = parse_literal(a);
    const double det = determinant(left_matrix(am));
    const double p = functional_P(am);
    const std::string text =
        format_number(det) + " (= P(a)^2, P(a)=" + format_number(p) + ")\n";
    return emit(opt, text, {{"det", round12(det)}, {"P", round12(p)}, {"P_squared", round12(p * p)}});
  });
}

CommandResult cmd_verify(int trials, bool parallel, const Options& opt) {
  if (trials < 1) return error(kExitUsage, "--trials must be at least 1");

  const auto start = std::chrono::steady_clock::now();
  const auto reports = verify::run_all_suites({trials, opt.seed, parallel});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool ok = true;
  std::string text;
  json suites = json::array();
  for (const verify::SuiteReport& r : reports) {
    ok = ok && r.passed();
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-22s trials=%-6d failures=%-4d %s\n", r.name.c_str(), r.trials, r.failures,
                  r.passed() ? "PASS" : "FAIL");
    text += buf;
    if (!r.passed()) text += "    first failure: " + r.first_failure + "\n";
    suites.push_back({{"name", r.name}, {"trials", r.trials}, {"failures", r.failures}, {"first_failure", r.first_failure}});
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s (%.2f s)\n", ok ? "all suites passed" : "verification FAILED", seconds);
  text += buf;
  return emit(opt, text, {{"passed", ok}, {"seed", opt.seed}, {"suites", suites}}, ok ? kExitOk : kExitDomain);
}

}  // namespace cl12::cli
