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


#include "glyphclash/errors.h"

namespace glyphclash {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax:
      return "SyntaxError";
    case ErrorKind::kSchema:
      return "SchemaError";
    case ErrorKind::kBounds:
      return "BoundsError";
    case ErrorKind::kPath:
      return "PathError";
    case ErrorKind::kIo:
      return "IoError";
    case ErrorKind::kDecode:
      return "DecodeError";
    case ErrorKind::kFont:
      return "FontError";
    case ErrorKind::kArity:
      return "ArityError";
    case ErrorKind::kParam:
      return "ParamError";
    case ErrorKind::kTransport:
      return "TransportError";
    case ErrorKind::kProtocol:
      return "ProtocolError";
    case ErrorKind::kTimeout:
      return "TimeoutError";
    case ErrorKind::kConfig:
      return "ConfigError";
    case ErrorKind::kModelMismatch:
      return "ModelMismatchError";
    case ErrorKind::kUnknownSpec:
      return "UnknownSpecError";
  }
  return "Error";
}

}  // namespace glyphclash
