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


"""Writes the synthetic sample images under samples/.

The images are drawn procedurally so the repository ships no photographs.
Run from the repository root: python3 tools/make_samples.py
"""

import math
import pathlib
import struct
import zlib


def write_png(path, width, height, pixel):
    rows = bytearray()
    for y in range(height):
        rows.append(0)
        for x in range(width):
            rows.extend(pixel(x, y))

    def chunk(tag, data):
        body = tag + data
        return struct.pack(">I", len(data)) + body + struct.pack(">I", zlib.crc32(body))

    ihdr = struct.pack(">IIBBBBB", width, height, 8, 6, 0, 0, 0)
    data = (b"\x89PNG\r\n\x1a\n" + chunk(b"IHDR", ihdr) +
            chunk(b"IDAT", zlib.compress(bytes(rows), 9)) + chunk(b"IEND", b""))
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(data)


def apple(x, y):
    cx, cy, r = 112, 124, 80
    d = math.hypot(x - cx, (y - cy) * 1.08)
    if 104 <= x <= 112 and 30 <= y <= 52:
        return (96, 60, 30, 255)  # stem
    if math.hypot((x - 132) * 0.6, y - 40) < 10:
        return (60, 150, 50, 255)  # leaf
    if d < r:
        shade = int(40 * d / r)
        hi = max(0, 60 - int(math.hypot(x - 80, y - 95)))
        return (min(255, 150 - shade + hi), min(255, 200 - shade + hi), 60 + hi // 2, 255)
    return (245, 245, 240, 255)


def web(x, y):
    dx, dy = x - 8, y - 8
    ring = round(math.hypot(dx, dy)) % 4 == 0
    spoke = dx == 0 or dy == 0 or abs(dx) == abs(dy)
    return (230, 230, 230, 255) if ring or spoke else (40, 40, 48, 255)


def bee(x, y):
    dx, dy = (x - 15.5) / 14, (y - 15.5) / 9
    if dx * dx + dy * dy > 1:
        return (0, 0, 0, 0)
    return (20, 20, 20, 255) if (x // 5) % 2 else (250, 200, 20, 255)


def main():
    root = pathlib.Path(__file__).resolve().parent.parent / "samples"
    write_png(root / "images" / "apple.png", 224, 224, apple)
    write_png(root / "textures" / "web.png", 16, 16, web)
    write_png(root / "icons" / "bee.png", 32, 32, bee)


if __name__ == "__main__":
    main()
