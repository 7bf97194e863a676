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


#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "compositor/raster.h"
#include "glyphclash/attack_dsl.h"
#include "glyphclash/compositor.h"
#include "glyphclash/errors.h"

namespace glyphclash::compositor {

Composition compose(const ImageBuffer& base, const dsl::AttackSpec& spec,
                    const ComposeOptions& options) {
  const std::vector<dsl::Violation> violations =
      dsl::validate_spec(spec, base.width(), base.height());
  if (!violations.empty()) {
    std::string message = "spec '" + spec.id + "' does not fit a " +
                          std::to_string(base.width()) + "x" +
                          std::to_string(base.height()) + " base:";
    for (const dsl::Violation& v : violations) message += " " + to_string(v) + ";";
    message.pop_back();
    BoundsError error(message);
    if (violations.front().layer) error.set_layer_index(*violations.front().layer);
    throw error;
  }

  Composition result;
  internal::Canvas canvas(base, /*track_ink=*/true);
  RngState rng(spec.seed);
  for (std::size_t i = 0; i < spec.layers.size(); ++i) {
    try {
      std::visit(
          [&](const auto& layer) {
            using T = std::decay_t<decltype(layer)>;
            if constexpr (std::is_same_v<T, dsl::TextOverlay>) {
              internal::apply_text(canvas, layer);
            } else if constexpr (std::is_same_v<T, dsl::ImageFontText>) {
              internal::apply_image_font(canvas, layer, options.asset_root);
            } else if constexpr (std::is_same_v<T, dsl::FloodText>) {
              FloodResult& report = result.floods.emplace_back();
              internal::apply_flood(canvas, layer, rng, &report);
            } else if constexpr (std::is_same_v<T, dsl::IconOverlay>) {
              internal::apply_icon(canvas, layer, options.asset_root);
            } else if constexpr (std::is_same_v<T, dsl::Rotation>) {
              canvas = internal::apply_rotation(canvas, layer);
            } else if constexpr (std::is_same_v<T, dsl::PositionedGlyphs>) {
              internal::apply_positioned(canvas, layer);
            } else if constexpr (std::is_same_v<T, dsl::MaskPatch>) {
              internal::apply_patch(canvas, layer);
            } else if constexpr (std::is_same_v<T, dsl::ColorRemap>) {
              internal::apply_remap(canvas, layer);
            } else {
              canvas = internal::apply_figurative(canvas, layer, rng);
            }
          },
          spec.layers[i]);
    } catch (Error& e) {
      if (!e.layer_index()) e.set_layer_index(i);
      throw;
    }
  }

  result.metadata.text_ink_px = canvas.count_ink(internal::kInkText);
  result.metadata.flood_ink_px = canvas.count_ink(internal::kInkFlood);
  result.metadata.target_label = spec.target_label;
  result.image = std::move(canvas.image);
  return result;
}

}  // namespace glyphclash::compositor
