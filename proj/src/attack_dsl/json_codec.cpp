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

#include "attack_dsl/json_codec.h"

#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "common/json_reader.h"
#include "glyphclash/errors.h"
#include "glyphclash/font.h"

namespace glyphclash::dsl::json_codec {
namespace {

using namespace json_reader;  // NOLINT

std::string as_nonempty_text(const Json& j, const std::string& path) {
  std::string s = as_string(j, path);
  std::u32string decoded;
  if (!font::decode_utf8(s, &decoded)) schema(path, "invalid UTF-8");
  if (decoded.empty()) schema(path, "must be non-empty");
  return s;
}

std::vector<int> as_int_array(const Json& j, const std::string& path,
                              std::size_t n) {
  if (!j.is_array() || j.size() != n) {
    schema(path, "expected array of " + std::to_string(n) + " integers");
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(as_int(j[i], index_path(path, i)));
  return out;
}

Rgba as_rgba(const Json& j, const std::string& path) {
  const std::vector<int> v = as_int_array(j, path, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    if (v[i] < 0 || v[i] > 255) bounds(index_path(path, i), "channel must be in 0..255");
  }
  return {static_cast<std::uint8_t>(v[0]), static_cast<std::uint8_t>(v[1]),
          static_cast<std::uint8_t>(v[2]), static_cast<std::uint8_t>(v[3])};
}

Point as_point(const Json& j, const std::string& path) {
  const std::vector<int> v = as_int_array(j, path, 2);
  return {v[0], v[1]};
}

std::string as_font(const Json& j, const std::string& path) {
  std::string id = as_string(j, path);
  if (!font::has_font(id)) schema(path, "unknown font_id '" + id + "'");
  return id;
}

Json rgba_json(const Rgba& c) { return Json::array({c.r, c.g, c.b, c.a}); }
Json point_json(const Point& p) { return Json::array({p.x, p.y}); }

TextOverlay text_overlay_from(ObjectReader& r) {
  TextOverlay l;
  l.text = as_nonempty_text(r.required("text"), r.field_path("text"));
  if (const Json* v = r.optional("font_id")) l.font_id = as_font(*v, r.field_path("font_id"));
  l.size_px = as_int(r.required("size_px"), r.field_path("size_px"));
  l.color = as_rgba(r.required("color"), r.field_path("color"));
  if (const Json* v = r.optional("outline")) l.outline = as_rgba(*v, r.field_path("outline"));
  l.anchor = as_point(r.required("anchor"), r.field_path("anchor"));
  if (const Json* v = r.optional("rotation_deg")) {
    l.rotation_deg = normalize_degrees(as_double(*v, r.field_path("rotation_deg")));
  }
  if (const Json* v = r.optional("warp")) {
    ObjectReader w(*v, r.field_path("warp"));
    Warp warp;
    warp.amplitude_px = as_double(w.required("amplitude_px"), w.field_path("amplitude_px"));
    warp.wavelength_px = as_double(w.required("wavelength_px"), w.field_path("wavelength_px"));
    w.finish();
    l.warp = warp;
  }
  return l;
}

Json to_json(const TextOverlay& l) {
  Json j;
  j["op"] = "TextOverlay";
  j["text"] = l.text;
  j["font_id"] = l.font_id;
  j["size_px"] = l.size_px;
  j["color"] = rgba_json(l.color);
  if (l.outline) j["outline"] = rgba_json(*l.outline);
  j["anchor"] = point_json(l.anchor);
  j["rotation_deg"] = number_to_json(normalize_degrees(l.rotation_deg));
  if (l.warp) {
    Json w;
    w["amplitude_px"] = number_to_json(l.warp->amplitude_px);
    w["wavelength_px"] = number_to_json(l.warp->wavelength_px);
    j["warp"] = std::move(w);
  }
  return j;
}

ImageFontText image_font_from(ObjectReader& r) {
  ImageFontText l;
  l.text = as_nonempty_text(r.required("text"), r.field_path("text"));
  l.texture = as_nonempty_text(r.required("texture"), r.field_path("texture"));
  if (const Json* v = r.optional("per_glyph_textures")) {
    const std::string p = r.field_path("per_glyph_textures");
    if (!v->is_array()) schema(p, "expected array of strings");
    std::vector<std::string> textures;
    for (std::size_t i = 0; i < v->size(); ++i) {
      textures.push_back(as_nonempty_text((*v)[i], index_path(p, i)));
    }
    l.per_glyph_textures = std::move(textures);
  }
  if (const Json* v = r.optional("font_id")) l.font_id = as_font(*v, r.field_path("font_id"));
  l.size_px = as_int(r.required("size_px"), r.field_path("size_px"));
  l.anchor = as_point(r.required("anchor"), r.field_path("anchor"));
  if (const Json* v = r.optional("mode")) {
    const std::string mode = as_string(*v, r.field_path("mode"));
    if (mode == "fill") {
      l.mode = ImageFontMode::kFill;
    } else if (mode == "decorate") {
      l.mode = ImageFontMode::kDecorate;
    } else {
      schema(r.field_path("mode"), "expected 'fill' or 'decorate'");
    }
  }
  return l;
}

Json to_json(const ImageFontText& l) {
  Json j;
  j["op"] = "ImageFontText";
  j["text"] = l.text;
  j["texture"] = l.texture;
  if (l.per_glyph_textures) j["per_glyph_textures"] = *l.per_glyph_textures;
  j["font_id"] = l.font_id;
  j["size_px"] = l.size_px;
  j["anchor"] = point_json(l.anchor);
  j["mode"] = l.mode == ImageFontMode::kFill ? "fill" : "decorate";
  return j;
}

FloodText flood_from(ObjectReader& r) {
  FloodText l;
  const std::string wp = r.field_path("words");
  const Json& words = r.required("words");
  if (!words.is_array()) schema(wp, "expected array of strings");
  for (std::size_t i = 0; i < words.size(); ++i) {
    l.words.push_back(as_nonempty_text(words[i], index_path(wp, i)));
  }
  l.count = as_int(r.required("count"), r.field_path("count"));
  const std::vector<int> range =
      as_int_array(r.required("size_px_range"), r.field_path("size_px_range"), 2);
  l.size_px_range = {range[0], range[1]};
  l.color = as_rgba(r.required("color"), r.field_path("color"));
  if (const Json* v = r.optional("collision_free")) {
    l.collision_free = as_bool(*v, r.field_path("collision_free"));
  }
  if (const Json* v = r.optional("font_id")) l.font_id = as_font(*v, r.field_path("font_id"));
  return l;
}

Json to_json(const FloodText& l) {
  Json j;
  j["op"] = "FloodText";
  j["words"] = l.words;
  j["count"] = l.count;
  j["size_px_range"] = Json::array({l.size_px_range[0], l.size_px_range[1]});
  j["color"] = rgba_json(l.color);
  j["collision_free"] = l.collision_free;
  j["font_id"] = l.font_id;
  return j;
}

IconOverlay icon_from(ObjectReader& r) {
  IconOverlay l;
  l.icon = as_nonempty_text(r.required("icon"), r.field_path("icon"));
  l.anchor = as_point(r.required("anchor"), r.field_path("anchor"));
  if (const Json* v = r.optional("scale")) l.scale = as_double(*v, r.field_path("scale"));
  if (const Json* v = r.optional("tint")) l.tint = as_rgba(*v, r.field_path("tint"));
  return l;
}

Json to_json(const IconOverlay& l) {
  Json j;
  j["op"] = "IconOverlay";
  j["icon"] = l.icon;
  j["anchor"] = point_json(l.anchor);
  j["scale"] = number_to_json(l.scale);
  if (l.tint) j["tint"] = rgba_json(*l.tint);
  return j;
}

Rotation rotation_from(ObjectReader& r) {
  Rotation l;
  l.degrees = normalize_degrees(as_double(r.required("degrees"), r.field_path("degrees")));
  if (const Json* v = r.optional("resample")) {
    const std::string s = as_string(*v, r.field_path("resample"));
    if (s == "nearest") {
      l.resample = Resample::kNearest;
    } else if (s == "bilinear") {
      l.resample = Resample::kBilinear;
    } else {
      schema(r.field_path("resample"), "expected 'nearest' or 'bilinear'");
    }
  }
  return l;
}

Json to_json(const Rotation& l) {
  Json j;
  j["op"] = "Rotation";
  j["degrees"] = number_to_json(normalize_degrees(l.degrees));
  j["resample"] = l.resample == Resample::kNearest ? "nearest" : "bilinear";
  return j;
}

PositionedGlyphs glyphs_from(ObjectReader& r) {
  PositionedGlyphs l;
  const std::string gp = r.field_path("glyphs");
  const Json& glyphs = r.required("glyphs");
  if (!glyphs.is_array()) schema(gp, "expected array of glyph objects");
  for (std::size_t i = 0; i < glyphs.size(); ++i) {
    ObjectReader g(glyphs[i], index_path(gp, i));
    PlacedGlyph pg;
    pg.character = as_nonempty_text(g.required("char"), g.field_path("char"));
    std::u32string decoded;
    font::decode_utf8(pg.character, &decoded);
    if (decoded.size() != 1) schema(g.field_path("char"), "must be exactly one code point");
    pg.x = as_int(g.required("x"), g.field_path("x"));
    pg.y = as_int(g.required("y"), g.field_path("y"));
    pg.size_px = as_int(g.required("size_px"), g.field_path("size_px"));
    pg.color = as_rgba(g.required("color"), g.field_path("color"));
    g.finish();
    l.glyphs.push_back(std::move(pg));
  }
  if (const Json* v = r.optional("font_id")) l.font_id = as_font(*v, r.field_path("font_id"));
  return l;
}

Json to_json(const PositionedGlyphs& l) {
  Json j;
  j["op"] = "PositionedGlyphs";
  Json arr = Json::array();
  for (const auto& g : l.glyphs) {
    Json o;
    o["char"] = g.character;
    o["x"] = g.x;
    o["y"] = g.y;
    o["size_px"] = g.size_px;
    o["color"] = rgba_json(g.color);
    arr.push_back(std::move(o));
  }
  j["glyphs"] = std::move(arr);
  j["font_id"] = l.font_id;
  return j;
}

MaskPatch mask_from(ObjectReader& r) {
  MaskPatch l;
  const std::string shape = as_string(r.required("shape"), r.field_path("shape"));
  if (shape == "rect") {
    l.shape = PatchShape::kRect;
  } else if (shape == "ellipse") {
    l.shape = PatchShape::kEllipse;
  } else {
    schema(r.field_path("shape"), "expected 'rect' or 'ellipse'");
  }
  const std::vector<int> b = as_int_array(r.required("bounds"), r.field_path("bounds"), 4);
  l.bounds = {b[0], b[1], b[2], b[3]};
  l.fill = as_rgba(r.required("fill"), r.field_path("fill"));
  return l;
}

Json to_json(const MaskPatch& l) {
  Json j;
  j["op"] = "MaskPatch";
  j["shape"] = l.shape == PatchShape::kRect ? "rect" : "ellipse";
  j["bounds"] = Json::array({l.bounds.x, l.bounds.y, l.bounds.w, l.bounds.h});
  j["fill"] = rgba_json(l.fill);
  return j;
}

ColorRemap remap_from(ObjectReader& r) {
  ColorRemap l;
  const std::string pp = r.field_path("palette");
  const Json& palette = r.required("palette");
  if (!palette.is_array()) schema(pp, "expected array of {from, to} objects");
  for (std::size_t i = 0; i < palette.size(); ++i) {
    ObjectReader p(palette[i], index_path(pp, i));
    PaletteRule rule;
    rule.from = as_rgba(p.required("from"), p.field_path("from"));
    rule.to = as_rgba(p.required("to"), p.field_path("to"));
    p.finish();
    l.palette.push_back(rule);
  }
  l.tolerance = as_double(r.required("tolerance"), r.field_path("tolerance"));
  return l;
}

Json to_json(const ColorRemap& l) {
  Json j;
  j["op"] = "ColorRemap";
  Json arr = Json::array();
  for (const auto& rule : l.palette) {
    Json o;
    o["from"] = rgba_json(rule.from);
    o["to"] = rgba_json(rule.to);
    arr.push_back(std::move(o));
  }
  j["palette"] = std::move(arr);
  j["tolerance"] = number_to_json(l.tolerance);
  return j;
}

Figurative figurative_from(ObjectReader& r) {
  const std::string kind = as_string(r.required("kind"), r.field_path("kind"));
  ObjectReader p(r.required("params"), r.field_path("params"));
  Figurative l;
  if (kind == "ascii_art") {
    AsciiArtParams a;
    a.cell_px = as_int(p.required("cell_px"), p.field_path("cell_px"));
    a.charset = as_nonempty_text(p.required("charset"), p.field_path("charset"));
    if (const Json* v = p.optional("font_id")) a.font_id = as_font(*v, p.field_path("font_id"));
    l.params = a;
  } else if (kind == "dot_art") {
    DotArtParams d;
    d.spacing = as_int(p.required("spacing"), p.field_path("spacing"));
    d.threshold = as_int(p.required("threshold"), p.field_path("threshold"));
    l.params = d;
  } else if (kind == "skeletonized") {
    SkeletonParams s;
    s.threshold = as_int(p.required("threshold"), p.field_path("threshold"));
    l.params = s;
  } else if (kind == "paint_by_numbers") {
    PaintByNumbersParams n;
    n.k = as_int(p.required("k"), p.field_path("k"));
    if (const Json* v = p.optional("digit_px")) n.digit_px = as_int(*v, p.field_path("digit_px"));
    l.params = n;
  } else {
    schema(r.field_path("kind"),
           "expected one of ascii_art, dot_art, skeletonized, paint_by_numbers");
  }
  p.finish();
  return l;
}

Json to_json(const Figurative& l) {
  Json j;
  j["op"] = "Figurative";
  Json params;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, AsciiArtParams>) {
          j["kind"] = "ascii_art";
          params["cell_px"] = p.cell_px;
          params["charset"] = p.charset;
          params["font_id"] = p.font_id;
        } else if constexpr (std::is_same_v<T, DotArtParams>) {
          j["kind"] = "dot_art";
          params["spacing"] = p.spacing;
          params["threshold"] = p.threshold;
        } else if constexpr (std::is_same_v<T, SkeletonParams>) {
          j["kind"] = "skeletonized";
          params["threshold"] = p.threshold;
        } else {
          j["kind"] = "paint_by_numbers";
          params["k"] = p.k;
          params["digit_px"] = p.digit_px;
        }
      },
      l.params);
  j["params"] = std::move(params);
  return j;
}

LayerOp layer_from_json(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  const std::string op = as_string(r.required("op"), r.field_path("op"));
  LayerOp out;
  if (op == "TextOverlay") {
    out = text_overlay_from(r);
  } else if (op == "ImageFontText") {
    out = image_font_from(r);
  } else if (op == "FloodText") {
    out = flood_from(r);
  } else if (op == "IconOverlay") {
    out = icon_from(r);
  } else if (op == "Rotation") {
    out = rotation_from(r);
  } else if (op == "PositionedGlyphs") {
    out = glyphs_from(r);
  } else if (op == "MaskPatch") {
    out = mask_from(r);
  } else if (op == "ColorRemap") {
    out = remap_from(r);
  } else if (op == "Figurative") {
    out = figurative_from(r);
  } else {
    schema(r.field_path("op"), "unknown layer op '" + op + "'");
  }
  r.finish();
  return out;
}

// Splits "name[3]" into ("name", 3); index is -1 when absent.
bool split_segment(std::string_view seg, std::string* name, long* index) {
  const auto open = seg.find('[');
  if (open == std::string_view::npos) {
    *name = std::string(seg);
    *index = -1;
    return !name->empty();
  }
  if (seg.back() != ']' || open == 0) return false;
  *name = std::string(seg.substr(0, open));
  const std::string_view digits = seg.substr(open + 1, seg.size() - open - 2);
  if (digits.empty() || digits.size() > 9) return false;
  long v = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  *index = v;
  return true;
}

}  // namespace

Json parse_document(std::string_view doc) {
  return json_reader::parse_document(doc);
}

Json number_to_json(double v) {
  if (std::isfinite(v) && std::floor(v) == v && std::abs(v) <= 9007199254740992.0) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v);
}

AttackSpec spec_from_json(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  AttackSpec spec;
  spec.id = as_nonempty_text(r.required("id"), r.field_path("id"));
  {
    ObjectReader c(r.required("category"), r.field_path("category"));
    const std::string cat = as_string(c.required("category"), c.field_path("category"));
    const std::string var = as_string(c.required("variant"), c.field_path("variant"));
    c.finish();
    const auto category = category_from_name(cat);
    if (!category) schema(c.field_path("category"), "unknown category '" + cat + "'");
    const auto variant = variant_from_name(var);
    if (!variant) schema(c.field_path("variant"), "unknown variant '" + var + "'");
    if (category_of(*variant) != *category) {
      schema(c.path(), "variant '" + var + "' does not belong to category '" + cat + "'");
    }
    spec.category = {*category, *variant};
  }
  spec.base_image = as_string(r.required("base_image"), r.field_path("base_image"));
  {
    const std::string lp = r.field_path("layers");
    const Json& layers = r.required("layers");
    if (!layers.is_array()) schema(lp, "expected array of layer objects");
    if (layers.empty()) schema(lp, "must be non-empty");
    for (std::size_t i = 0; i < layers.size(); ++i) {
      spec.layers.push_back(layer_from_json(layers[i], index_path(lp, i)));
    }
  }
  spec.seed = as_u64(r.required("seed"), r.field_path("seed"));
  if (const Json* v = r.optional("target_label")) {
    spec.target_label = as_string(*v, r.field_path("target_label"));
  }
  if (const Json* v = r.optional("notes")) spec.notes = as_string(*v, r.field_path("notes"));
  r.finish();
  return spec;
}

Json spec_to_json(const AttackSpec& spec) {
  Json j;
  j["id"] = spec.id;
  Json cat;
  cat["category"] = std::string(category_name(spec.category.category));
  cat["variant"] = std::string(variant_name(spec.category.variant));
  j["category"] = std::move(cat);
  j["base_image"] = spec.base_image;
  Json layers = Json::array();
  for (const LayerOp& op : spec.layers) {
    layers.push_back(std::visit([](const auto& l) { return to_json(l); }, op));
  }
  j["layers"] = std::move(layers);
  j["seed"] = spec.seed;
  if (spec.target_label) j["target_label"] = *spec.target_label;
  if (spec.notes) j["notes"] = *spec.notes;
  return j;
}

SweepSpec sweep_from_json(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  SweepSpec sweep;
  sweep.base = spec_from_json(r.required("base"), r.field_path("base"));
  sweep.param_path = as_string(r.required("param_path"), r.field_path("param_path"));
  const std::string vp = r.field_path("values");
  const Json& values = r.required("values");
  if (!values.is_array()) schema(vp, "expected array of numbers");
  if (values.empty()) schema(vp, "must be non-empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    sweep.values.push_back(as_double(values[i], index_path(vp, i)));
    if (i > 0 && !(sweep.values[i] > sweep.values[i - 1])) {
      schema(vp, "values must be strictly increasing");
    }
  }
  r.finish();
  return sweep;
}

Json sweep_to_json(const SweepSpec& sweep) {
  Json j;
  j["base"] = spec_to_json(sweep.base);
  j["param_path"] = sweep.param_path;
  Json values = Json::array();
  for (double v : sweep.values) values.push_back(number_to_json(v));
  j["values"] = std::move(values);
  return j;
}

Json& resolve_numeric_path(Json& spec_json, std::string_view path) {
  const std::string full(path);
  auto fail = [&](const std::string& why) -> PathError {
    return PathError("param_path '" + full + "': " + why);
  };
  std::vector<std::string_view> segments;
  std::size_t start = 0;
  while (start <= path.size()) {
    const auto dot = path.find('.', start);
    const auto end = dot == std::string_view::npos ? path.size() : dot;
    segments.push_back(path.substr(start, end - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  Json* node = &spec_json;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    std::string name;
    long index = -1;
    if (!split_segment(segments[i], &name, &index)) throw fail("malformed segment");
    if (i == 0) {
      if (name != "layer" || index < 0) throw fail("must start with layer[N]");
      name = "layers";
    }
    if (!node->is_object() || !node->contains(name)) {
      throw fail("field '" + name + "' does not exist");
    }
    node = &(*node)[name];
    if (index >= 0) {
      if (!node->is_array() || static_cast<std::size_t>(index) >= node->size()) {
        throw fail("index " + std::to_string(index) + " out of range for '" + name + "'");
      }
      node = &(*node)[static_cast<std::size_t>(index)];
    }
  }
  if (segments.size() < 2) throw fail("does not name a layer field");
  if (!node->is_number()) throw fail("field is not numeric");
  return *node;
}

void throw_if_violations(const std::vector<Violation>& violations) {
  if (violations.empty()) return;
  throw BoundsError(to_string(violations.front()));
}

}  // namespace glyphclash::dsl::json_codec
