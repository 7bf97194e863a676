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

#ifndef GLYPHCLASH_ERRORS_H_
#define GLYPHCLASH_ERRORS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace glyphclash {

// Error kinds shared by every module. The kind name is what crosses process
// boundaries (API error payloads, results files), so names are stable.
enum class ErrorKind {
  kSyntax,
  kSchema,
  kBounds,
  kPath,
  kIo,
  kDecode,
  kFont,
  kArity,
  kParam,
  kTransport,
  kProtocol,
  kTimeout,
  kConfig,
  kModelMismatch,
  kUnknownSpec,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  std::string_view kind_name() const { return error_kind_name(kind_); }

  // Set by compose() when the error originated inside a layer.
  std::optional<std::size_t> layer_index() const { return layer_index_; }
  void set_layer_index(std::size_t index) { layer_index_ = index; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> layer_index_;
};

#define GLYPHCLASH_DEFINE_ERROR(Name, Kind)                              \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& message) : Error(Kind, message) {} \
  }

GLYPHCLASH_DEFINE_ERROR(SchemaError, ErrorKind::kSchema);
GLYPHCLASH_DEFINE_ERROR(BoundsError, ErrorKind::kBounds);
GLYPHCLASH_DEFINE_ERROR(PathError, ErrorKind::kPath);
GLYPHCLASH_DEFINE_ERROR(IoError, ErrorKind::kIo);
GLYPHCLASH_DEFINE_ERROR(DecodeError, ErrorKind::kDecode);
GLYPHCLASH_DEFINE_ERROR(FontError, ErrorKind::kFont);
GLYPHCLASH_DEFINE_ERROR(ArityError, ErrorKind::kArity);
GLYPHCLASH_DEFINE_ERROR(ParamError, ErrorKind::kParam);
GLYPHCLASH_DEFINE_ERROR(TransportError, ErrorKind::kTransport);
GLYPHCLASH_DEFINE_ERROR(ProtocolError, ErrorKind::kProtocol);
GLYPHCLASH_DEFINE_ERROR(TimeoutError, ErrorKind::kTimeout);
GLYPHCLASH_DEFINE_ERROR(ConfigError, ErrorKind::kConfig);
GLYPHCLASH_DEFINE_ERROR(ModelMismatchError, ErrorKind::kModelMismatch);
GLYPHCLASH_DEFINE_ERROR(UnknownSpecError, ErrorKind::kUnknownSpec);

#undef GLYPHCLASH_DEFINE_ERROR

// Malformed document. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::kSyntax, message), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace glyphclash

#endif  // GLYPHCLASH_ERRORS_H_
