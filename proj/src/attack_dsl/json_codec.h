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

#ifndef GLYPHCLASH_SRC_ATTACK_DSL_JSON_CODEC_H_
#define GLYPHCLASH_SRC_ATTACK_DSL_JSON_CODEC_H_

#include <string>
#include <string_view>
#include <vector>

#include "common/json_reader.h"
#include "glyphclash/attack_dsl.h"

namespace glyphclash::dsl::json_codec {

using Json = json_reader::Json;

// Throws SyntaxError carrying the 1-based line and column.
Json parse_document(std::string_view doc);

// `path` prefixes error messages, e.g. "entries[3].spec".
AttackSpec spec_from_json(const Json& j, const std::string& path);
Json spec_to_json(const AttackSpec& spec);

SweepSpec sweep_from_json(const Json& j, const std::string& path);
Json sweep_to_json(const SweepSpec& sweep);

// Integral values within 2^53 become JSON integers so that integer fields
// accept them and canonical output has no trailing ".0".
Json number_to_json(double v);

// Resolves "layer[N].field[.field|[i]]*" to a numeric node. Throws PathError.
Json& resolve_numeric_path(Json& spec_json, std::string_view path);

// Throws BoundsError describing the first violation, if any.
void throw_if_violations(const std::vector<Violation>& violations);

}  // namespace glyphclash::dsl::json_codec

#endif  // GLYPHCLASH_SRC_ATTACK_DSL_JSON_CODEC_H_
