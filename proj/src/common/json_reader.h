// Copyright 2026 The Glyphclash Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Strict JSON reading helpers shared by the document parsers. Errors name
// the offending field by its path, e.g. "layers[2].anchor".

#ifndef GLYPHCLASH_SRC_COMMON_JSON_READER_H_
#define GLYPHCLASH_SRC_COMMON_JSON_READER_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glyphclash/errors.h"
#include "json.hpp"

namespace glyphclash::json_reader {

// Insertion-ordered so serialized documents follow the type definitions.
using Json = nlohmann::ordered_json;

inline std::string join(const std::string& path, std::string_view key) {
  if (path.empty()) return std::string(key);
  return path + "." + std::string(key);
}

inline std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

[[noreturn]] inline void schema(const std::string& path, const std::string& what) {
  throw SchemaError((path.empty() ? std::string("document") : path) + ": " + what);
}

[[noreturn]] inline void bounds(const std::string& path, const std::string& what) {
  throw BoundsError((path.empty() ? std::string("document") : path) + ": " + what);
}

inline int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected integer");
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
      bounds(path, "integer out of range");
    }
    return static_cast<int>(v);
  }
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    bounds(path, "integer out of range");
  }
  return static_cast<int>(v);
}

inline double as_double(const Json& j, const std::string& path) {
  if (!j.is_number()) schema(path, "expected number");
  return j.get<double>();
}

inline std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected string");
  return j.get<std::string>();
}

inline bool as_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) schema(path, "expected boolean");
  return j.get<bool>();
}

inline std::uint64_t as_u64(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected unsigned integer");
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  const auto v = j.get<std::int64_t>();
  if (v < 0) bounds(path, "must be >= 0");
  return static_cast<std::uint64_t>(v);
}

// Tracks which keys were read so leftovers can be rejected.
class ObjectReader {
 public:
  ObjectReader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) schema(path_, "expected object");
  }

  const std::string& path() const { return path_; }
  std::string field_path(std::string_view key) const { return join(path_, key); }

  const Json& required(std::string_view key) {
    const Json* v = optional(key);
    if (v == nullptr) schema(path_, "missing required field '" + std::string(key) + "'");
    return *v;
  }

  // Absent and explicit null are equivalent.
  const Json* optional(std::string_view key) {
    seen_.insert(std::string(key));
    auto it = j_.find(key);
    if (it == j_.end() || it->is_null()) return nullptr;
    return &*it;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.contains(it.key())) schema(path_, "unknown field '" + it.key() + "'");
    }
  }

 private:
  const Json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

inline std::vector<std::string> as_string_array(const Json& j,
                                                const std::string& path) {
  if (!j.is_array()) schema(path, "expected array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_string(j[i], index_path(path, i)));
  }
  return out;
}

// Throws SyntaxError carrying the 1-based line and column.
inline Json parse_document(std::string_view doc) {
  try {
    return Json::parse(doc.begin(), doc.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop =
        std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, doc.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (doc[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SyntaxError("malformed JSON at line " + std::to_string(line) +
                          ", column " + std::to_string(column) + ": " + e.what(),
                      line, column);
  }
}

}  // namespace glyphclash::json_reader

#endif  // GLYPHCLASH_SRC_COMMON_JSON_READER_H_
