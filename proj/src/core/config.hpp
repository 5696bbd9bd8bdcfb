#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lanemeta {

// Flat key-value configuration. Files are plain text, one `key = value` per
// line, `#` starts a comment. Later assignments win, so layering is
// defaults -> file(s) -> command-line overrides in merge order.
class Config {
 public:
  Config() = default;

  static Config defaults();

  void load_file(const std::string& path);  // throws on I/O or parse error
  void set(const std::string& key, const std::string& value);
  void merge(const Config& other);  // other wins

  bool has(const std::string& key) const;

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  int64_t get_int(const std::string& key) const;
  int64_t get_int(const std::string& key, int64_t fallback) const;
  uint64_t get_u64(const std::string& key, uint64_t fallback) const;
  bool get_bool(const std::string& key) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_double_list(const std::string& key) const;

  // Deterministic dump, keys sorted, `key = value` per line.
  std::string dump() const;

  const std::map<std::string, std::string>& items() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace lanemeta
