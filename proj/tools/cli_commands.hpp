#ifndef SWSH_TOOLS_CLI_COMMANDS_HPP
#define SWSH_TOOLS_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace swsh::cli {

enum class Command { eval, euler, verify, sweep };
enum class OutputFormat { json, csv, text };

/// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitNumericFailure = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable consulted for the default seed.
inline constexpr const char* kSeedEnv = "SWSH_SEED";

struct RunConfig {
  Command command = Command::eval;

  // Spin-type tokens ("1", "-1/2", ...) are kept as text until the command
  // parses them, so malformed input surfaces as a usage error.
  std::string s = "0";
  std::optional<std::string> sprime;
  std::optional<std::string> ell;
  std::string m = "0";

  double theta = 0.0;
  double phi = 0.0;
  double theta_p = 0.0;
  double phi_p = 0.0;
  bool degrees = false;

  std::string target = "Y";
  std::string theorem = "all";
  std::string mode = "two_point";
  std::string form = "verified";
  bool single_point = false;  // verify: --s/--sprime/--ell were given

  std::string spin_max = "2";
  std::string ell_max = "8";
  std::size_t samples = 100;
  double tol_scale = 1.0;
  std::uint64_t seed = 42;

  std::vector<double> thetas;  // sweep grid

  OutputFormat format = OutputFormat::json;
  std::optional<std::string> output_path;
};

/// One value of a harmonic or operator at a point.
int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Relative Euler angles between (theta, phi) and (theta_p, phi_p).
int cmd_euler(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Theorem checks over a (theorem, s, s', ell) grid; one report per entry.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Coincident s' = s sums against their closed forms along a theta grid.
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches. Never throws; returns an exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swsh::cli

#endif  // SWSH_TOOLS_CLI_COMMANDS_HPP
