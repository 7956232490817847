// Copyright 2026 The qblur Authors
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

/**
 * Portable graymap / pixmap IO.
 *
 * Reads P2, P3, P5 and P6 with any maxval up to 65535 (16-bit binary samples
 * are big-endian). Always writes the binary variants with maxval 255.
 *
 * Pixel (column x, row y) maps to height-map coordinate (x, y) over the box
 * (width, height); values are sample / maxval. Writing rounds v * 255.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qblur/height_map.hpp"

namespace qblur::io {

/// File could not be read, parsed or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PnmImage {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    /// 1 for graymap, 3 for pixmap.
    unsigned channels = 1;
    std::uint32_t max_value = 255;
    /// Row-major, channels interleaved.
    std::vector<std::uint16_t> samples;

    std::uint16_t sample(std::uint32_t x, std::uint32_t y, unsigned c = 0) const {
        return samples[(std::size_t{y} * width + x) * channels + c];
    }

    friend bool operator==(const PnmImage &, const PnmImage &) = default;
};

PnmImage parse_pnm(std::string_view bytes);
/// Binary encoding (P5 or P6). Requires max_value <= 255.
std::string encode_pnm(const PnmImage &image);

PnmImage read_pnm(const std::filesystem::path &path);
/// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path &path, std::string_view bytes);
void write_pnm(const std::filesystem::path &path, const PnmImage &image);

HeightMap to_height_map(const PnmImage &image, unsigned channel = 0);
ColorImage to_color_image(const PnmImage &image);

/// 8-bit graymap of a 2D height map; values are clamped to [0, 1].
PnmImage from_height_map(const HeightMap &height);
PnmImage from_color_image(const ColorImage &image);

/// Zero-pads a 2D map to a square of side max(width, height, 2).
HeightMap pad_to_square(const HeightMap &height);

}  // namespace qblur::io
