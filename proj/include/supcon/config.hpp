#pragma once

#include <string>

#include "supcon/limb_sim.hpp"

namespace supcon {

/// Reads a run configuration from the flat sectioned key=value format.
/// Every key is optional and falls back to the built-in defaults; unknown
/// sections or keys raise ConfigError naming them. A trajectory scenario
/// loads its reference CSV relative to the config file's directory.
RunConfig load_run_config(const std::string& path);

/// Same parser over an in-memory string (trajectory paths resolve against
/// base_dir).
RunConfig parse_run_config(const std::string& text, const std::string& base_dir);

/// Renders identified wire parameters as a config fragment that
/// load_run_config accepts verbatim (the missing [actuator1] section makes
/// the run mirror actuator0 onto both wires).
std::string params_fragment(const ActuatorParams& p);

}  // namespace supcon
