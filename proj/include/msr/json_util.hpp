// Copyright 2026 The msr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Strict JSON access: every read names its JSON path on failure, and every
// object is checked against an explicit key allowlist so unknown fields are
// rejected rather than ignored.

#ifndef MSR_JSON_UTIL_HPP
#define MSR_JSON_UTIL_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "msr/errors.hpp"

namespace msr::jsonx {

using nlohmann::json;

inline json parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

// dump with sorted keys (the json type is map-backed), two-space indent and
// a trailing newline: the canonical on-disk form.
inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

inline const json& object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + " must be an object");
  return j;
}

inline const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + " must be an array");
  return j;
}

inline void check_keys(const json& obj, const std::string& path,
                       std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* a : allowed) {
      if (it.key() == a) known = true;
    }
    if (!known) throw ParseError("unknown field " + path + "." + it.key());
  }
}

inline const json& member(const json& obj, const char* key,
                          const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError("missing field " + path + "." + key);
  }
  return *it;
}

inline std::string req_string(const json& obj, const char* key,
                              const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_string()) {
    throw ParseError(path + "." + key + " must be a string");
  }
  return v.get<std::string>();
}

inline std::string opt_string(const json& obj, const char* key,
                              const std::string& path) {
  if (obj.find(key) == obj.end()) return "";
  return req_string(obj, key, path);
}

inline double req_double(const json& obj, const char* key,
                         const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_number()) {
    throw ParseError(path + "." + key + " must be a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    throw ParseError(path + "." + key + " must be finite");
  }
  return d;
}

inline std::optional<double> opt_double(const json& obj, const char* key,
                                        const std::string& path) {
  if (obj.find(key) == obj.end()) return std::nullopt;
  return req_double(obj, key, path);
}

inline bool opt_bool(const json& obj, const char* key,
                     const std::string& path, bool fallback = false) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) {
    throw ParseError(path + "." + key + " must be a boolean");
  }
  return it->get<bool>();
}

inline std::size_t req_count(const json& obj, const char* key,
                             const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(path + "." + key +
                     " must be a nonnegative integer");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

inline std::vector<std::string> opt_string_array(const json& obj,
                                                 const char* key,
                                                 const std::string& path) {
  std::vector<std::string> out;
  const auto it = obj.find(key);
  if (it == obj.end()) return out;
  const json& arr = array(*it, path + "." + key);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& v = arr[i];
    if (!v.is_string()) {
      throw ParseError(path + "." + key + "[" + std::to_string(i) +
                       "] must be a string");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline void expect_format(const json& obj, const char* expected,
                          const std::string& path) {
  const std::string got = req_string(obj, "format", path);
  if (got != expected) {
    throw ParseError(path + ".format is \"" + got + "\", expected \"" +
                     expected + "\"");
  }
}

}  // namespace msr::jsonx

#endif  // MSR_JSON_UTIL_HPP
