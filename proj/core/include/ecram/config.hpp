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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ecram {

/// INI-style configuration: `[section]` headers (dots allowed for nesting),
/// `key = value` entries, `#`/`;` comments. Repeated keys are kept in order.
class Config {
 public:
  static Config load(const std::string& path);
  static Config parse(const std::string& text, const std::string& origin = "<string>");

  bool has(const std::string& section, const std::string& key) const;

  /// Single-valued getters; the *require* forms throw ConfigError naming
  /// "[section] key" when absent, the others fall back to the default.
  std::string require_string(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double require_double(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;
  long require_int(const std::string& section, const std::string& key) const;
  long get_int(const std::string& section, const std::string& key, long fallback) const;
  bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

  /// Whitespace-separated list of numbers in one value.
  std::vector<double> require_doubles(const std::string& section, const std::string& key) const;

  /// All values recorded for a repeated key, in file order.
  std::vector<std::string> get_all(const std::string& section, const std::string& key) const;

  /// Sets (or overrides) a value; used for flag overrides.
  void set(const std::string& section, const std::string& key, const std::string& value);

  /// Directory of the loaded file, for resolving relative paths in values.
  const std::string& base_dir() const { return base_dir_; }
  std::string resolve_path(const std::string& relative) const;

  /// FNV-1a 64-bit hash of the raw file text, hex encoded.
  const std::string& content_hash() const { return content_hash_; }

 private:
  struct Entry {
    std::string key;
    std::string value;
  };
  std::map<std::string, std::vector<Entry>> sections_;
  std::string base_dir_ = ".";
  std::string content_hash_;

  const std::string* find(const std::string& section, const std::string& key) const;
};

std::uint64_t fnv1a64(const std::string& data);

}  // namespace ecram
