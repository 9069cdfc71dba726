#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace supcon::cli {

struct RunOptions {
  std::string config_path;
  std::optional<std::string> out;
  std::optional<double> dt;
  std::optional<double> mismatch;
};

struct VerifyOptions {
  std::string config_path;
  std::vector<double> gammas;  ///< empty = use the config's gamma
  std::optional<std::string> out;
};

struct SweepOptions {
  std::string config_path;
  std::vector<double> gammas;
  std::optional<std::string> out;
  std::optional<double> dt;
  std::optional<double> mismatch;
};

struct CalibrateOptions {
  std::string csv_path;
  double dt = 0.1;
  std::optional<std::string> out;
};

// Each command prints human-readable results to `out` and returns a process
// exit code. Errors escape as supcon exceptions; main() renders them.
int cmd_run(const RunOptions& opt, std::ostream& out);
int cmd_verify(const VerifyOptions& opt, std::ostream& out);
int cmd_sweep(const SweepOptions& opt, std::ostream& out);
int cmd_calibrate(const CalibrateOptions& opt, std::ostream& out);

/// Comma-separated doubles, e.g. "0.05,0.1,0.2".
std::vector<double> parse_gamma_list(const std::string& text);

}  // namespace supcon::cli
