#include "core/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lanemeta {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::defaults() {
  Config c;
  // Scenario geometry and integration.
  c.set("sim.lanes", "3");
  c.set("sim.lane_width", "3.75");
  c.set("sim.segment_length", "800");
  c.set("sim.dt", "0.1");
  c.set("sim.lane_change_duration", "3.0");
  c.set("sim.vehicle_length", "5.0");
  c.set("sim.vehicle_width", "2.0");
  c.set("sim.v_max", "33.3");
  c.set("sim.ego_start_lane", "2");
  c.set("sim.target_lane", "0");
  c.set("sim.ego_init_speed", "25.0");
  c.set("sim.max_episode_steps", "1200");
  c.set("sim.despawn_margin", "100.0");
  c.set("sim.entry_clear", "15.0");
  c.set("sim.warm_start", "true");
  c.set("sim.warm_start_min_pos", "60.0");
  // Car-following model.
  c.set("idm.v0", "33.3");
  c.set("idm.s0", "2.0");
  c.set("idm.time_headway", "1.5");
  c.set("idm.a_max", "2.0");
  c.set("idm.b_comfort", "3.0");
  c.set("idm.delta", "4.0");
  // Reward weights and thresholds.
  c.set("reward.w_comfort", "0.2");
  c.set("reward.w_efficiency", "0.4");
  c.set("reward.w_safety", "0.4");
  c.set("reward.p_collision", "10.0");
  c.set("reward.c_time", "0.01");
  c.set("reward.d_near", "10.0");
  c.set("reward.j_max", "10.0");
  c.set("shield.enabled", "true");
  c.set("shield.d_crit", "2.0");
  // Task-level PPO learner.
  c.set("ppo.horizon", "512");
  c.set("ppo.clip", "0.2");
  c.set("ppo.epochs", "10");
  c.set("ppo.minibatch", "64");
  c.set("ppo.gamma", "0.99");
  c.set("ppo.lambda", "0.95");
  c.set("ppo.lr", "1e-4");
  c.set("ppo.c1", "0.5");
  c.set("ppo.c2", "0.01");
  c.set("ppo.grad_clip", "10.0");
  c.set("ppo.anneal", "true");
  // Meta learner.
  c.set("meta.inner_lr", "1e-4");
  c.set("meta.outer_lr", "1e-4");
  c.set("meta.inner_steps", "1");
  c.set("meta.tasks_per_batch", "3");
  c.set("meta.iterations", "300");
  c.set("meta.mode", "fo");
  c.set("meta.grad_clip", "10.0");
  c.set("meta.anneal", "true");
  c.set("meta.ckpt_every", "50");
  c.set("meta.eval_every", "10");
  c.set("meta.eval_episodes", "20");
  // Task distribution.
  c.set("tasks.train_f", "0.3,0.4,0.5");
  c.set("tasks.test_f", "0.7");
  // Evaluation / adaptation study.
  c.set("eval.episodes", "50");
  c.set("eval.seeds", "5");
  c.set("eval.steps", "40");
  c.set("eval.every", "1");
  c.set("eval.traces", "false");
  // Run-level.
  c.set("run.seed", "1");
  c.set("run.workers", "0");
  return c;
}

void Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected `key = value`, got: " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": empty key");
    }
    set(key, value);
  }
}

void Config::set(const std::string& key, const std::string& value) {
  kv_[key] = value;
}

void Config::merge(const Config& other) {
  for (const auto& [k, v] : other.kv_) kv_[k] = v;
}

bool Config::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string Config::get_string(const std::string& key) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) throw std::runtime_error("missing config key: " + key);
  return it->second;
}

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) const {
  const auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key) const {
  const std::string v = get_string(key);
  size_t pos = 0;
  double d = 0;
  try {
    d = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("config key " + key + ": not a number: " + v);
  }
  if (pos != v.size())
    throw std::runtime_error("config key " + key + ": not a number: " + v);
  return d;
}

double Config::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

int64_t Config::get_int(const std::string& key) const {
  const std::string v = get_string(key);
  size_t pos = 0;
  int64_t n = 0;
  try {
    n = std::stoll(v, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("config key " + key + ": not an integer: " + v);
  }
  if (pos != v.size())
    throw std::runtime_error("config key " + key + ": not an integer: " + v);
  return n;
}

int64_t Config::get_int(const std::string& key, int64_t fallback) const {
  return has(key) ? get_int(key) : fallback;
}

uint64_t Config::get_u64(const std::string& key, uint64_t fallback) const {
  if (!has(key)) return fallback;
  const std::string v = get_string(key);
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw std::runtime_error("config key " + key + ": not an integer: " + v);
  }
}

bool Config::get_bool(const std::string& key) const {
  const std::string v = get_string(key);
  if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "off" || v == "0" || v == "no") return false;
  throw std::runtime_error("config key " + key + ": not a boolean: " + v);
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  return has(key) ? get_bool(key) : fallback;
}

std::vector<double> Config::get_double_list(const std::string& key) const {
  const std::string v = get_string(key);
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

std::string Config::dump() const {
  std::ostringstream os;
  for (const auto& [k, v] : kv_) os << k << " = " << v << "\n";
  return os.str();
}

}  // namespace lanemeta
