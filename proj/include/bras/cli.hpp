#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bras/scenarios.hpp"

namespace bras {

/// Malformed command line or scenario file. exit_code is what the process
/// should return (0 only for a help request).
class CliError : public std::runtime_error {
 public:
  CliError(const std::string& what, int code)
      : std::runtime_error(what), exit_code(code) {}
  int exit_code;
};

struct RunConfig {
  enum class Command { figure, scan, point, doppler };
  Command command = Command::scan;
  std::string figure_name{};
  ScanSpec spec{};
  double point_delta = 0.0;  ///< probe detuning for single-point evaluation
  std::string out_path{};    ///< empty means stdout
  int precision = 12;
};

/// Parse a full argument vector (without the program name) into a RunConfig.
/// A scenario file can be supplied with --config; explicit flags override
/// file values and unknown file keys are rejected by name. Throws CliError
/// on malformed input (single-line message) and on help requests
/// (exit_code 0, message is the help text).
RunConfig parse_config(const std::vector<std::string>& args);

/// Print chi(+B), chi(-B), T(B), T(-B) and the ratio for one parameter set
/// as key = value lines, using the configured precision.
void point_eval(const RunConfig& config, std::ostream& out);

/// Parse and execute; returns the process exit status (0 only if the
/// computation completed without singular or quadrature errors).
int run_cli(int argc, const char* const* argv);

}  // namespace bras
