#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sphlap2::cli {

inline constexpr const char* kVersion = "sphlap2 0.1.0 (SPH-LAP2 precision toolkit, model rev 1)";

enum class Command { Validate, PrecisionFn, PrecisionMatrix, Simulate, Variogram, Predict, Energy };

/// Everything one invocation needs. Paths are checked before any compute.
struct RunConfig {
  Command command = Command::Validate;

  std::optional<std::string> theta;  // "t0,t1,t2"
  std::optional<double> matern_xi;
  double h = 1.0;
  int d = 2;

  // precision-fn
  double rmax = 10.0;
  int samples = 200;
  bool normalize = false;
  std::optional<std::string> plot_path;

  // precision-matrix, predict, energy
  std::optional<std::string> points_path;
  std::optional<std::string> targets_path;
  double epsilon = 0.0;
  bool sparse = false;

  // simulate
  int side = 256;
  double spacing = 1.0;
  std::optional<std::uint64_t> seed;
  int reps = 1;
  std::optional<std::string> svg_path;

  // variogram
  std::optional<std::string> grid_path;
  int max_lag = 20;
  std::optional<std::string> model;
  std::optional<double> model_xi;

  std::optional<std::string> out_path;
};

/// Executes a parsed configuration. Results go to out (or --out); throws
/// sphlap2::Error on failure.
void execute(const RunConfig& config, std::ostream& out);

/// Full command-line entry point (args[0] is the program name). Returns the
/// process exit status; failures print one line "error: <Code>: <message>"
/// to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sphlap2::cli
