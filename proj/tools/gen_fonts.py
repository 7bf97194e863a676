#!/usr/bin/env python3
# Copyright 2026 The Glyphclash Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates src/compositor/font_data.cpp from the DejaVu TrueType faces.

Each face is rasterized once at a 48 px line height and thresholded to a
1-bit master bitmap. The C++ side only ever samples these masters, so the
rendered output never depends on a system font stack.

Usage: gen_fonts.py <ttf_dir> <out.cpp>
"""

import sys
from pathlib import Path

from PIL import Image, ImageDraw, ImageFont

LINE_HEIGHT = 48
POINT_SIZE = 40  # ascent 38 + descent 10 == LINE_HEIGHT for all faces used
CODEPOINTS = list(range(0x20, 0x7F)) + [0x2588]

FACES = [
    # (font_id, file, decorate)
    ("sans-plain", "DejaVuSans.ttf", False),
    ("serif-display", "DejaVuSerif.ttf", False),
    ("ornate", "DejaVuSerif-Bold.ttf", True),
]


def render_master(font, ch):
    """Returns (advance, set of (x, y)) for one glyph on the master grid."""
    advance = int(round(font.getlength(ch)))
    width = advance + LINE_HEIGHT
    img = Image.new("L", (width, LINE_HEIGHT), 0)
    ImageDraw.Draw(img).text((LINE_HEIGHT // 4, 0), ch, font=font, fill=255)
    pts = set()
    px = img.load()
    for y in range(LINE_HEIGHT):
        for x in range(width):
            if px[x, y] >= 128:
                pts.add((x - LINE_HEIGHT // 4, y))
    return advance, pts


def full_block(advance):
    return {(x, y) for x in range(advance) for y in range(LINE_HEIGHT)}


def dilate(pts, r):
    out = set()
    for (x, y) in pts:
        for dy in range(-r, r + 1):
            for dx in range(-r, r + 1):
                out.add((x + dx, y + dy))
    return out


def erode(pts, r):
    return {p for p in pts
            if all((p[0] + dx, p[1] + dy) in pts
                   for dy in range(-r, r + 1) for dx in range(-r, r + 1))}


def ornament(pts):
    # Engraved look: hollow outline, diagonal hatching inside, and an
    # offset drop shadow that only shows where it clears the letter.
    if not pts:
        return pts
    ring = pts - erode(pts, 2)
    inner = erode(pts, 2)
    hatch = {(x, y) for (x, y) in inner if (x + y) % 4 == 0}
    halo = dilate(pts, 1)
    shadow = {(x + 3, y + 3) for (x, y) in pts} - halo
    out = ring | hatch | shadow
    return {(x, y) for (x, y) in out if 0 <= y < LINE_HEIGHT}


def pack(pts):
    if not pts:
        return 0, 0, 0, 0, b""
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, y0 = min(xs), min(ys)
    w, h = max(xs) - x0 + 1, max(ys) - y0 + 1
    stride = (w + 7) // 8
    data = bytearray(stride * h)
    for (x, y) in pts:
        cx, cy = x - x0, y - y0
        data[cy * stride + cx // 8] |= 0x80 >> (cx % 8)
    return x0, y0, w, h, bytes(data)


def main():
    ttf_dir = Path(sys.argv[1])
    out = Path(sys.argv[2])
    lines = []
    emit = lines.append
    emit("// Copyright 2026 The Glyphclash Authors.")
    emit("//")
    emit("// Licensed under the Apache License, Version 2.0 (the \"License\");")
    emit("// you may not use this file except in compliance with the License.")
    emit("// You may obtain a copy of the License at")
    emit("//")
    emit("//      https://www.apache.org/licenses/LICENSE-2.0")
    emit("//")
    emit("// Unless required by applicable law or agreed to in writing, software")
    emit("// distributed under the License is distributed on an \"AS IS\" BASIS,")
    emit("// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.")
    emit("// See the License for the specific language governing permissions and")
    emit("// limitations under the License.")
    emit("")
    emit("// GENERATED by tools/gen_fonts.py. Do not edit.")
    emit("// Glyph outlines derived from the DejaVu fonts; see assets/fonts/LICENSE_DEJAVU.")
    emit("")
    emit('#include "compositor/font_data.h"')
    emit("")
    emit("namespace glyphclash::compositor::font_data {")
    emit("namespace {")
    emit("")
    face_names = []
    for font_id, fname, decorate in FACES:
        font = ImageFont.truetype(str(ttf_dir / fname), POINT_SIZE)
        ascent, descent = font.getmetrics()
        assert ascent + descent == LINE_HEIGHT, (fname, ascent, descent)
        records = []
        blob = bytearray()
        for cp in CODEPOINTS:
            ch = chr(cp)
            advance, pts = render_master(font, ch)
            if cp == 0x2588:
                pts = full_block(advance)
            elif decorate:
                pts = ornament(pts)
            x0, y0, w, h, data = pack(pts)
            records.append((cp, advance, x0, y0, w, h, len(blob)))
            blob.extend(data)
        sym = font_id.replace("-", "_")
        face_names.append((font_id, sym))
        emit(f"constexpr unsigned char k_{sym}_bits[] = {{")
        for i in range(0, len(blob), 24):
            emit("    " + ",".join(f"0x{b:02x}" for b in blob[i:i + 24]) + ",")
        emit("};")
        emit("")
        emit(f"constexpr GlyphRecord k_{sym}_glyphs[] = {{")
        for (cp, adv, x0, y0, w, h, off) in records:
            emit(f"    {{0x{cp:04x}, {adv}, {x0}, {y0}, {w}, {h}, {off}}},")
        emit("};")
        emit("")
    emit("}  // namespace")
    emit("")
    emit("const FaceRecord kFaces[] = {")
    for font_id, sym in face_names:
        emit(f"    {{\"{font_id}\", k_{sym}_glyphs, sizeof(k_{sym}_glyphs) / sizeof(GlyphRecord), k_{sym}_bits}},")
    emit("};")
    emit("")
    emit("const std::size_t kFaceCount = sizeof(kFaces) / sizeof(FaceRecord);")
    emit("")
    emit("}  // namespace glyphclash::compositor::font_data")
    out.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
