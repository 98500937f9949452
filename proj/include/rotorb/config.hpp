#pragma once
// Flat key = value run configuration.
//
// Grammar: one `key = value` pair per line; '#' starts a comment (full line
// or trailing); blank lines ignored; keys and values are trimmed; duplicate
// keys are an error.  Typed getters validate on access and name the offending
// key in every error message.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotorb/phase_layout.hpp"

namespace rotorb {

class RunConfig {
 public:
  static RunConfig from_stream(std::istream& in) {
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const std::string trimmed = trim(line);
      if (trimmed.empty()) continue;
      const size_t eq = trimmed.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("config line " + std::to_string(lineno) +
                                    ": expected `key = value`, got `" +
                                    trimmed + "`");
      const std::string key = trim(trimmed.substr(0, eq));
      const std::string value = trim(trimmed.substr(eq + 1));
      if (key.empty())
        throw std::invalid_argument("config line " + std::to_string(lineno) +
                                    ": empty key");
      if (!cfg.kv_.emplace(key, value).second)
        throw std::invalid_argument("config: duplicate key `" + key + "`");
    }
    return cfg;
  }

  static RunConfig from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open `" + path + "`");
    return from_stream(in);
  }

  void set(const std::string& key, const std::string& value) {
    kv_[key] = value;
  }
  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  std::string get_string(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end())
      throw std::invalid_argument("config: missing required key `" + key +
                                  "`");
    return it->second;
  }
  std::string get_string(const std::string& key, const std::string& def) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? def : it->second;
  }

  double get_double(const std::string& key) const {
    return parse_double(key, get_string(key));
  }
  double get_double(const std::string& key, double def) const {
    return has(key) ? get_double(key) : def;
  }

  long long get_int(const std::string& key) const {
    return parse_int(key, get_string(key));
  }
  long long get_int(const std::string& key, long long def) const {
    return has(key) ? get_int(key) : def;
  }

  std::uint64_t get_uint64(const std::string& key, std::uint64_t def) const {
    if (!has(key)) return def;
    const long long v = get_int(key);
    if (v < 0)
      throw std::invalid_argument("config: key `" + key +
                                  "` must be nonnegative");
    return static_cast<std::uint64_t>(v);
  }

  // Comma-separated integer list, e.g. `v = 0, 1, 0`.
  RotationVector get_int_list(const std::string& key) const {
    const std::string raw = get_string(key);
    RotationVector out;
    std::string item;
    std::stringstream ss(raw);
    while (std::getline(ss, item, ',')) {
      const std::string t = trim(item);
      if (t.empty())
        throw std::invalid_argument("config: key `" + key +
                                    "` has an empty list entry");
      out.push_back(static_cast<int>(parse_int(key, t)));
    }
    if (out.empty())
      throw std::invalid_argument("config: key `" + key + "` is empty");
    return out;
  }

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;

  static std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
  }

  static double parse_double(const std::string& key, const std::string& v) {
    try {
      size_t used = 0;
      const double x = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument("trailing");
      return x;
    } catch (const std::exception&) {
      throw std::invalid_argument("config: key `" + key +
                                  "` is not a number: `" + v + "`");
    }
  }

  static long long parse_int(const std::string& key, const std::string& v) {
    try {
      size_t used = 0;
      const long long x = std::stoll(v, &used);
      if (used != v.size()) throw std::invalid_argument("trailing");
      return x;
    } catch (const std::exception&) {
      throw std::invalid_argument("config: key `" + key +
                                  "` is not an integer: `" + v + "`");
    }
  }
};

}  // namespace rotorb
