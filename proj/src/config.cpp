#include "supcon/config.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "supcon/io.hpp"

namespace supcon {

namespace {

std::string trim(const std::string& s) {
  const size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Sectioned key=value text with '#' comments. Keeps track of which keys the
// loader consumed so typos surface as errors instead of silent defaults.
class ConfigMap {
 public:
  explicit ConfigMap(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::string section;
    int row = 0;
    while (std::getline(is, line)) {
      ++row;
      const size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') {
          throw ConfigError("config line " + std::to_string(row) + ": unterminated section header");
        }
        section = trim(line.substr(1, line.size() - 2));
        continue;
      }
      const size_t eq = line.find('=');
      if (eq == std::string::npos) {
        throw ConfigError("config line " + std::to_string(row) + ": expected key = value");
      }
      const std::string key = trim(line.substr(0, eq));
      if (section.empty() || key.empty()) {
        throw ConfigError("config line " + std::to_string(row) + ": key outside a [section]");
      }
      values_[section + "." + key] = trim(line.substr(eq + 1));
    }
  }

  bool has(const std::string& section, const std::string& key) const {
    return values_.count(section + "." + key) > 0;
  }

  double number(const std::string& section, const std::string& key, double fallback) {
    const std::string* raw = fetch(section, key);
    if (!raw) return fallback;
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(*raw, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != raw->size()) {
      throw ConfigError(section + "." + key + ": not a number: \"" + *raw + "\"");
    }
    return v;
  }

  bool boolean(const std::string& section, const std::string& key, bool fallback) {
    const std::string* raw = fetch(section, key);
    if (!raw) return fallback;
    if (*raw == "true" || *raw == "1") return true;
    if (*raw == "false" || *raw == "0") return false;
    throw ConfigError(section + "." + key + ": expected true or false, got \"" + *raw + "\"");
  }

  std::string text(const std::string& section, const std::string& key, std::string fallback) {
    const std::string* raw = fetch(section, key);
    return raw ? *raw : fallback;
  }

  void reject_unconsumed() const {
    for (const auto& [full_key, value] : values_) {
      if (!consumed_.count(full_key)) {
        throw ConfigError("unknown config key " + full_key);
      }
    }
  }

 private:
  const std::string* fetch(const std::string& section, const std::string& key) {
    const auto it = values_.find(section + "." + key);
    if (it == values_.end()) return nullptr;
    consumed_.insert(it->first);
    return &it->second;
  }

  std::map<std::string, std::string> values_;
  std::set<std::string> consumed_;
};

ActuatorParams read_actuator(ConfigMap& map, const std::string& section,
                             const ActuatorParams& fallback) {
  ActuatorParams p = fallback;
  p.a1 = map.number(section, "a1", fallback.a1);
  p.a2 = map.number(section, "a2", fallback.a2);
  p.a3 = map.number(section, "a3", fallback.a3);
  p.dt = map.number(section, "dt", fallback.dt);
  return p;
}

}  // namespace

RunConfig parse_run_config(const std::string& text, const std::string& base_dir) {
  ConfigMap map(text);
  RunConfig cfg;

  cfg.actuator0 = read_actuator(map, "actuator0", cfg.actuator0);
  cfg.actuator1 = read_actuator(map, "actuator1", cfg.actuator0);

  cfg.body.gain = map.number("body", "gain", cfg.body.gain);
  cfg.body.stiffness = map.number("body", "stiffness", cfg.body.stiffness);
  cfg.body.damping = map.number("body", "damping", cfg.body.damping);
  cfg.body.t_act = map.number("body", "t_act", cfg.body.t_act);
  if (map.has("body", "theta_wall")) {
    cfg.body.theta_wall = map.number("body", "theta_wall", 0.0);
  }

  const std::string kind = map.text("controller", "type", "pi_aw");
  if (kind == "pi_aw") {
    cfg.controller.kind = ControllerKind::PiAw;
  } else if (kind == "smc") {
    cfg.controller.kind = ControllerKind::Smc;
  } else {
    throw ConfigError("controller.type must be pi_aw or smc, got \"" + kind + "\"");
  }
  cfg.controller.pi.kp = map.number("controller", "kp", cfg.controller.pi.kp);
  cfg.controller.pi.ki = map.number("controller", "ki", cfg.controller.pi.ki);
  cfg.controller.pi.kaw = map.number("controller", "kaw", cfg.controller.pi.kaw);
  cfg.controller.smc.lambda = map.number("controller", "lambda", cfg.controller.smc.lambda);
  cfg.controller.smc.ki = map.number("controller", "ki_smc", cfg.controller.smc.ki);
  cfg.controller.smc.phi = map.number("controller", "phi", cfg.controller.smc.phi);

  SupervisorConfig sup;
  sup.gamma = map.number("supervisor", "gamma", sup.gamma);
  sup.w_max = map.number("supervisor", "w_max", sup.w_max);
  sup.w_lb = map.number("supervisor", "w_lb", sup.w_lb);
  cfg.verify_tol = map.number("supervisor", "tol", cfg.verify_tol);
  if (!(cfg.verify_tol > 0.0)) throw ConfigError("supervisor.tol must be > 0");
  if (map.boolean("supervisor", "enabled", true)) {
    cfg.supervisor = sup;
  }

  const std::string scenario = map.text("scenario", "kind", "free_step");
  if (scenario == "free_step") {
    cfg.scenario.kind = ScenarioKind::FreeStep;
  } else if (scenario == "wall") {
    cfg.scenario.kind = ScenarioKind::Wall;
  } else if (scenario == "human_disturbance") {
    cfg.scenario.kind = ScenarioKind::HumanDisturbance;
  } else if (scenario == "trajectory") {
    cfg.scenario.kind = ScenarioKind::Trajectory;
  } else {
    throw ConfigError("scenario.kind must be free_step, wall, human_disturbance or trajectory, got \"" +
                      scenario + "\"");
  }
  cfg.scenario.theta_ref = map.number("scenario", "theta_ref", cfg.scenario.theta_ref);
  cfg.scenario.duration = map.number("scenario", "duration", cfg.scenario.duration);
  cfg.scenario.disturbance_start =
      map.number("scenario", "disturbance_start", cfg.scenario.disturbance_start);
  cfg.scenario.disturbance_end =
      map.number("scenario", "disturbance_end", cfg.scenario.disturbance_end);
  cfg.scenario.disturbance_magnitude =
      map.number("scenario", "disturbance_magnitude", cfg.scenario.disturbance_magnitude);
  const std::string trajectory_file = map.text("scenario", "trajectory_file", "");
  if (cfg.scenario.kind == ScenarioKind::Trajectory) {
    if (trajectory_file.empty()) {
      throw ConfigError("scenario.trajectory_file is required for a trajectory scenario");
    }
    const bool absolute = !trajectory_file.empty() && trajectory_file.front() == '/';
    const std::string resolved =
        absolute || base_dir.empty() ? trajectory_file : base_dir + "/" + trajectory_file;
    cfg.scenario.trajectory = read_trajectory_csv(resolved);
  }

  cfg.sim.dt = map.number("sim", "dt", cfg.sim.dt);
  cfg.sim.ambient = map.number("sim", "ambient", cfg.sim.ambient);
  cfg.sim.mismatch = map.number("sim", "mismatch", cfg.sim.mismatch);
  cfg.sim.sensor_noise_std = map.number("sim", "sensor_noise_std", cfg.sim.sensor_noise_std);
  cfg.sim.seed = static_cast<unsigned long>(map.number("sim", "seed", 0.0));
  cfg.sim.flip_actuators = map.boolean("sim", "flip_actuators", false);
  cfg.out = map.text("sim", "out", cfg.out);

  map.reject_unconsumed();

  // Surface range errors at load time with the section-qualified message.
  try {
    validate(cfg.actuator0);
    validate(cfg.actuator1);
    validate(cfg.body);
    validate(cfg.controller.pi);
    validate(cfg.controller.smc);
    if (cfg.supervisor) validate(*cfg.supervisor);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const size_t slash = path.find_last_of('/');
  const std::string base_dir = slash == std::string::npos ? "" : path.substr(0, slash);
  return parse_run_config(buffer.str(), base_dir);
}

std::string params_fragment(const ActuatorParams& p) {
  validate(p);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "# identified wire model: w' = a1 w + a2 u + a3\n"
                "[actuator0]\n"
                "a1 = %.17g\n"
                "a2 = %.17g\n"
                "a3 = %.17g\n"
                "dt = %.17g\n",
                p.a1, p.a2, p.a3, p.dt);
  return buf;
}

}  // namespace supcon
