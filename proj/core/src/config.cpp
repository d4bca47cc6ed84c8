/* Copyright 2026 ecramsim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ecram/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ecram/csv.hpp"
#include "ecram/errors.hpp"

namespace ecram {

namespace {
std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '#' || s[i] == ';') return s.substr(0, i);
  return s;
}
}  // namespace

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  Config cfg = parse(ss.str(), path);
  auto slash = path.find_last_of('/');
  cfg.base_dir_ = slash == std::string::npos ? "." : path.substr(0, slash);
  return cfg;
}

Config Config::parse(const std::string& text, const std::string& origin) {
  Config cfg;
  {
    std::ostringstream hex;
    std::uint64_t h = fnv1a64(text);
    const char* digits = "0123456789abcdef";
    for (int i = 60; i >= 0; i -= 4) hex << digits[(h >> i) & 0xf];
    cfg.content_hash_ = hex.str();
  }
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      cfg.sections_[section];
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    cfg.sections_[section].push_back({key, value});
  }
  return cfg;
}

const std::string* Config::find(const std::string& section, const std::string& key) const {
  auto it = sections_.find(section);
  if (it == sections_.end()) return nullptr;
  const std::string* last = nullptr;
  for (const auto& e : it->second)
    if (e.key == key) last = &e.value;
  return last;
}

bool Config::has(const std::string& section, const std::string& key) const {
  return find(section, key) != nullptr;
}

std::string Config::require_string(const std::string& section, const std::string& key) const {
  const std::string* v = find(section, key);
  if (!v) throw ConfigError("missing config key [" + section + "] " + key);
  return *v;
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
  const std::string* v = find(section, key);
  return v ? *v : fallback;
}

double Config::require_double(const std::string& section, const std::string& key) const {
  auto v = parse_double(require_string(section, key));
  if (!v) throw ConfigError("config key [" + section + "] " + key + " is not a number");
  return *v;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
  if (!has(section, key)) return fallback;
  return require_double(section, key);
}

long Config::require_int(const std::string& section, const std::string& key) const {
  double d = require_double(section, key);
  long l = static_cast<long>(d);
  if (static_cast<double>(l) != d)
    throw ConfigError("config key [" + section + "] " + key + " is not an integer");
  return l;
}

long Config::get_int(const std::string& section, const std::string& key, long fallback) const {
  if (!has(section, key)) return fallback;
  return require_int(section, key);
}

bool Config::get_bool(const std::string& section, const std::string& key, bool fallback) const {
  if (!has(section, key)) return fallback;
  std::string v = require_string(section, key);
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("config key [" + section + "] " + key + " is not a boolean");
}

std::vector<double> Config::require_doubles(const std::string& section,
                                            const std::string& key) const {
  std::istringstream ss(require_string(section, key));
  std::vector<double> out;
  std::string tok;
  while (ss >> tok) {
    auto v = parse_double(tok);
    if (!v)
      throw ConfigError("config key [" + section + "] " + key + ": bad number '" + tok + "'");
    out.push_back(*v);
  }
  if (out.empty()) throw ConfigError("config key [" + section + "] " + key + " is empty");
  return out;
}

std::vector<std::string> Config::get_all(const std::string& section,
                                         const std::string& key) const {
  std::vector<std::string> out;
  auto it = sections_.find(section);
  if (it == sections_.end()) return out;
  for (const auto& e : it->second)
    if (e.key == key) out.push_back(e.value);
  return out;
}

void Config::set(const std::string& section, const std::string& key, const std::string& value) {
  sections_[section].push_back({key, value});
}

std::string Config::resolve_path(const std::string& relative) const {
  if (relative.empty() || relative.front() == '/') return relative;
  return base_dir_ + "/" + relative;
}

}  // namespace ecram
