#pragma once

// Command implementations behind the cl12 executable. Each command returns
// its full output and exit code instead of writing to the terminal.

#include <cstdint>
#include <optional>
#include <string>

namespace cl12::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  bool json = false;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  bool strict = false;  // unsolvable equations exit with kExitDomain
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

enum class EquationKind { Axb, Ax, Xb };

CommandResult cmd_eval(const std::string& expr, const Options& opt);

/// Literals for a, b, d; a is ignored for Xb and b for Ax.
CommandResult cmd_solve(EquationKind kind, const std::optional<std::string>& a, const std::optional<std::string>& b,
                        const std::optional<std::string>& d, const Options& opt);

CommandResult cmd_similar(const std::string& a, const std::string& b, const Options& opt);

/// side is "left" or "right".
CommandResult cmd_rep(const std::string& a, const std::string& side, const Options& opt);
CommandResult cmd_eig(const std::string& a, const Options& opt);
CommandResult cmd_det(const std::string& a, const Options& opt);

CommandResult cmd_verify(int trials, bool parallel, const Options& opt);

}  // namespace cl12::cli
