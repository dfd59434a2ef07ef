#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fermisea/trap.hpp"

namespace fermisea::cli {

// Command line misuse; `kind` names the failure class (unknown flag, missing
// parameter, bad value, ...). Mapped to exit code 2.
struct usage_error : std::runtime_error {
  std::string kind;
  usage_error(std::string error_kind, const std::string& message)
      : std::runtime_error(message), kind(std::move(error_kind)) {}
};

// File output failure; carries path and cause. Mapped to exit code 3.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by parse_args when --help is requested.
struct help_requested {
  std::string text;
};

enum class Command { Pattern, Shells, Degeneracy, Count, TightSweep, FermiShell, Figure };
enum class OutputFormat { Csv, Json, Svg };

std::string to_string(Command command);
std::string to_string(OutputFormat format);

struct RunConfig {
  Command command = Command::Pattern;
  Shape shape = Shape::Pancake;
  int lambda = 1;
  double eta2 = 0.0;
  int fermi_shell = -1;
  long long atoms = 0;
  int theta_samples = 721;
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;  // empty = stdout (csv/json only)
  int figure_id = 0;
  double lambda_min = 1.0;  // tight-sweep only; real-valued lambda is allowed here
  double lambda_max = 1.0;
  int lambda_samples = 2000;
};

/// Parse a CLI argument list (program name excluded) into a validated config.
/// Throws usage_error on misuse and help_requested for --help.
RunConfig parse_args(const std::vector<std::string>& args);

/// Tight-axis modification factor swept over a real-valued aspect-ratio
/// range; returns (lambda, M_f) pairs. The closed form is shape independent.
std::vector<std::pair<double, double>> tight_sweep(Shape shape, double eta2, int fermi_shell,
                                                   double lambda_min, double lambda_max,
                                                   int samples);

/// The exact bytes the command writes (CSV, JSON, or SVG). Deterministic for
/// identical configs.
std::string render_output(const RunConfig& config);

/// Serialized "params" object embedded in JSON output for this config.
std::string params_json(const RunConfig& config);

/// Execute a command: render and write to the configured destination.
void run(const RunConfig& config, std::ostream& console);

/// Full front end with exit-code mapping: 0 success, 2 usage, 3 I/O,
/// 4 internal numerical guard.
int run_main(const std::vector<std::string>& args, std::ostream& console, std::ostream& errors);

}  // namespace fermisea::cli
