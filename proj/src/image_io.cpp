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

#include "qblur/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include <unistd.h>

namespace qblur::io {

namespace {

class HeaderReader {
   public:
    explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

    // Skips whitespace and '#' comments, then reads a decimal number.
    std::uint32_t number(const char *what) {
        skip_space();
        std::uint64_t v = 0;
        std::size_t digits = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(bytes_[pos_++] - '0');
            if (v > 0xffffffffULL) throw IoError(std::string("PNM ") + what + " is too large");
            ++digits;
        }
        if (digits == 0) throw IoError(std::string("PNM header: expected ") + what);
        return static_cast<std::uint32_t>(v);
    }

    // Binary rasters start after exactly one whitespace byte.
    void single_space() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw IoError("PNM header: missing whitespace before raster");
        }
        ++pos_;
    }

    std::size_t pos() const { return pos_; }

   private:
    void skip_space() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view bytes_;
    std::size_t pos_ = 2;
};

std::uint16_t quantize(double v) {
    return static_cast<std::uint16_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

void require_2d(const Box &box) {
    if (box.rank() != 2) throw std::invalid_argument("images must be two-dimensional");
}

}  // namespace

PnmImage parse_pnm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P') throw IoError("not a PNM file");
    const char kind = bytes[1];
    if (kind != '2' && kind != '3' && kind != '5' && kind != '6') {
        throw IoError(std::string("unsupported PNM kind P") + kind);
    }
    HeaderReader header(bytes);
    PnmImage img;
    img.channels = (kind == '3' || kind == '6') ? 3 : 1;
    img.width = header.number("width");
    img.height = header.number("height");
    img.max_value = header.number("maxval");
    if (img.width == 0 || img.height == 0) throw IoError("PNM image has zero size");
    if (img.max_value == 0 || img.max_value > 65535) throw IoError("PNM maxval must be in [1, 65535]");

    const std::size_t count = std::size_t{img.width} * img.height * img.channels;
    img.samples.resize(count);
    if (kind == '2' || kind == '3') {
        for (std::size_t i = 0; i < count; ++i) {
            const auto v = header.number("sample");
            if (v > img.max_value) throw IoError("PNM sample exceeds maxval");
            img.samples[i] = static_cast<std::uint16_t>(v);
        }
        return img;
    }
    header.single_space();
    const std::size_t bytes_per = img.max_value > 255 ? 2 : 1;
    const std::size_t start = header.pos();
    if (bytes.size() - start < count * bytes_per) throw IoError("PNM raster is truncated");
    for (std::size_t i = 0; i < count; ++i) {
        std::uint16_t v = static_cast<unsigned char>(bytes[start + i * bytes_per]);
        if (bytes_per == 2) v = static_cast<std::uint16_t>((v << 8) | static_cast<unsigned char>(bytes[start + 2 * i + 1]));
        if (v > img.max_value) throw IoError("PNM sample exceeds maxval");
        img.samples[i] = v;
    }
    return img;
}

std::string encode_pnm(const PnmImage &image) {
    if (image.max_value == 0 || image.max_value > 255) {
        throw std::invalid_argument("encode_pnm writes 8-bit images only");
    }
    if (image.channels != 1 && image.channels != 3) {
        throw std::invalid_argument("PNM images have 1 or 3 channels");
    }
    if (image.samples.size() != std::size_t{image.width} * image.height * image.channels) {
        throw std::invalid_argument("sample count does not match image size");
    }
    std::string out = (image.channels == 1 ? "P5\n" : "P6\n") + std::to_string(image.width) + " " +
                      std::to_string(image.height) + "\n" + std::to_string(image.max_value) + "\n";
    out.reserve(out.size() + image.samples.size());
    for (auto s : image.samples) out.push_back(static_cast<char>(s));
    return out;
}

PnmImage read_pnm(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    try {
        return parse_pnm(bytes);
    } catch (const IoError &e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void write_file_atomic(const std::filesystem::path &path, std::string_view bytes) {
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move output into place at " + path.string());
    }
}

void write_pnm(const std::filesystem::path &path, const PnmImage &image) {
    write_file_atomic(path, encode_pnm(image));
}

HeightMap to_height_map(const PnmImage &image, unsigned channel) {
    if (channel >= image.channels) throw std::invalid_argument("channel index out of range");
    HeightMap out(Box({image.width, image.height}));
    const double scale = 1.0 / image.max_value;
    for (std::uint32_t y = 0; y < image.height; ++y) {
        for (std::uint32_t x = 0; x < image.width; ++x) {
            const auto s = image.sample(x, y, channel);
            if (s != 0) out.set_cell(std::size_t{x} * image.height + y, s * scale);
        }
    }
    return out;
}

ColorImage to_color_image(const PnmImage &image) {
    if (image.channels != 3) throw std::invalid_argument("expected a pixmap with three channels");
    return ColorImage(to_height_map(image, 0), to_height_map(image, 1), to_height_map(image, 2));
}

PnmImage from_height_map(const HeightMap &height) {
    require_2d(height.box());
    PnmImage img;
    img.width = height.box().side(0);
    img.height = height.box().side(1);
    img.samples.assign(std::size_t{img.width} * img.height, 0);
    for (const auto &[cell, v] : height.cells()) {
        const auto x = cell / img.height, y = cell % img.height;
        img.samples[y * img.width + x] = quantize(v);
    }
    return img;
}

PnmImage from_color_image(const ColorImage &image) {
    require_2d(image.box());
    PnmImage img;
    img.channels = 3;
    img.width = image.box().side(0);
    img.height = image.box().side(1);
    img.samples.assign(std::size_t{img.width} * img.height * 3, 0);
    const HeightMap *channels[3] = {&image.red, &image.green, &image.blue};
    for (unsigned c = 0; c < 3; ++c) {
        for (const auto &[cell, v] : channels[c]->cells()) {
            const auto x = cell / img.height, y = cell % img.height;
            img.samples[(y * img.width + x) * 3 + c] = quantize(v);
        }
    }
    return img;
}

HeightMap pad_to_square(const HeightMap &height) {
    require_2d(height.box());
    const std::uint32_t w = height.box().side(0), h = height.box().side(1);
    const std::uint32_t side = std::max({w, h, 2u});
    if (w == side && h == side) return height;
    HeightMap out = HeightMap::square(side);
    for (const auto &[cell, v] : height.cells()) {
        out.set({static_cast<std::uint32_t>(cell / h), static_cast<std::uint32_t>(cell % h)}, v);
    }
    return out;
}

}  // namespace qblur::io
