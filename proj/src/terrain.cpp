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

#include "qblur/terrain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace qblur::terrain {

namespace {

// splitmix64 finalizer; spreads (seed, index) pairs over independent streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void require_2d(const Box &box, const char *what) {
    if (box.rank() != 2) {
        throw std::invalid_argument(std::string(what) + " must be two-dimensional");
    }
}

}  // namespace

HeightMap random_seed_image(const SeedSpec &spec) {
    if (spec.size < 2) {
        throw std::invalid_argument("seed image size must be at least 2");
    }
    const std::size_t area = std::size_t{spec.size} * spec.size;
    if (spec.point_count == 0 || spec.point_count > area) {
        throw std::invalid_argument("seed point count must be in [1, " + std::to_string(area) + "]");
    }
    std::mt19937_64 rng(spec.seed);
    std::vector<std::size_t> cells(area);
    std::iota(cells.begin(), cells.end(), std::size_t{0});
    // Partial Fisher-Yates: the first point_count entries are a uniform sample.
    for (std::size_t i = 0; i < spec.point_count; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, area - 1);
        std::swap(cells[i], cells[pick(rng)]);
    }
    HeightMap out = HeightMap::square(spec.size);
    for (std::size_t i = 0; i < spec.point_count; ++i) out.set_cell(cells[i], 1.0);
    return out;
}

std::vector<HeightMap> texture_variants(const HeightMap &seed_image, double theta,
                                        std::span<const HypercubeAutomorphism> automorphisms,
                                        const DecodeOptions &options) {
    require_2d(seed_image.box(), "seed image");
    if (seed_image.box().side(0) != seed_image.box().side(1)) {
        throw std::invalid_argument("seed image must be square");
    }
    const GridMapping base = make_grid(seed_image.box().side(0));
    auto [circuit, context] = height_to_circuit(seed_image, base);
    circuit.ry_all(theta);
    const auto state = qsim::run(circuit, options.execution);
    const auto weights = readout_weights(state, options);
    const double floor = options.mode == DecodeMode::exact ? options.prune_threshold : 0.0;

    std::vector<HeightMap> out;
    out.reserve(automorphisms.size());
    for (const auto &a : automorphisms) {
        out.push_back(decode_weights(weights, apply_automorphism(base, a), options.display, options.log_decades, floor));
    }
    return out;
}

std::vector<HeightMap> texture_variants(const HeightMap &seed_image, double theta, std::size_t count,
                                        std::uint64_t seed, const DecodeOptions &options) {
    if (count == 0) {
        throw std::invalid_argument("texture variant count must be positive");
    }
    require_2d(seed_image.box(), "seed image");
    const unsigned n = make_grid(seed_image.box().side(0)).qubit_count();
    std::vector<HypercubeAutomorphism> automorphisms;
    automorphisms.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        automorphisms.push_back(HypercubeAutomorphism::random(n, derive_seed(seed, k)));
    }
    return texture_variants(seed_image, theta, automorphisms, options);
}

HeightMap upscale_layout(const LayoutSpec &spec) {
    require_2d(spec.layout.box(), "layout");
    if (spec.target_width == 0 || spec.target_height == 0) {
        throw std::invalid_argument("layout target size must be positive");
    }
    const std::uint64_t lw = spec.layout.box().side(0), lh = spec.layout.box().side(1);
    HeightMap out(Box({spec.target_width, spec.target_height}));
    for (std::uint32_t x = 0; x < spec.target_width; ++x) {
        const auto sx = static_cast<std::uint32_t>(x * lw / spec.target_width);
        for (std::uint32_t y = 0; y < spec.target_height; ++y) {
            const auto sy = static_cast<std::uint32_t>(y * lh / spec.target_height);
            const double v = spec.layout.at({sx, sy});
            if (v > 0.0) out.set_cell(std::size_t{x} * spec.target_height + y, v);
        }
    }
    return out;
}

std::vector<Placement> plan_placements(const HeightMap &upscaled, std::size_t texture_count,
                                       const PlacementSpec &spec) {
    require_2d(upscaled.box(), "layout");
    if (texture_count == 0) {
        throw std::invalid_argument("placement needs at least one texture");
    }
    if (spec.attempts == 0) {
        throw std::invalid_argument("placement attempts must be positive");
    }
    const std::uint32_t w = upscaled.box().side(0), h = upscaled.box().side(1);
    const std::size_t area = upscaled.box().cell_count();

    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::uint32_t> pick_x(0, w - 1), pick_y(0, h - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick_texture(0, texture_count - 1);

    std::vector<Placement> out;
    for (std::size_t k = 0; k < spec.attempts; ++k) {
        std::uint32_t x, y;
        if (spec.anchors == AnchorMode::random) {
            x = pick_x(rng);
            y = pick_y(rng);
        } else {
            const std::size_t cell = k % area;
            x = static_cast<std::uint32_t>(cell / h);
            y = static_cast<std::uint32_t>(cell % h);
        }
        const double level = upscaled.at_cell(std::size_t{x} * h + y);
        if (unit(rng) < level) {
            out.push_back(Placement{x, y, pick_texture(rng)});
        }
    }
    return out;
}

HeightMap stamp_textures(const Box &target, std::span<const HeightMap> textures, std::span<const Placement> placements,
                         Combine combine) {
    require_2d(target, "island target");
    const std::int64_t w = target.side(0), h = target.side(1);
    for (const auto &t : textures) {
        require_2d(t.box(), "texture");
        if (t.box().side(0) > w || t.box().side(1) > h) {
            throw std::invalid_argument("texture is larger than the island target");
        }
    }
    std::vector<double> field(target.cell_count(), 0.0);
    for (const auto &p : placements) {
        if (p.texture >= textures.size()) {
            throw std::invalid_argument("placement references a missing texture");
        }
        const HeightMap &tex = textures[p.texture];
        const std::int64_t th = tex.box().side(1);
        const std::int64_t x0 = static_cast<std::int64_t>(p.x) - tex.box().side(0) / 2;
        const std::int64_t y0 = static_cast<std::int64_t>(p.y) - th / 2;
        for (const auto &[cell, v] : tex.cells()) {
            const std::int64_t x = x0 + static_cast<std::int64_t>(cell) / th;
            const std::int64_t y = y0 + static_cast<std::int64_t>(cell) % th;
            if (x < 0 || y < 0 || x >= w || y >= h) continue;
            double &dst = field[static_cast<std::size_t>(x * h + y)];
            dst = combine == Combine::max ? std::max(dst, v) : std::min(1.0, dst + v);
        }
    }
    HeightMap out(target);
    for (std::size_t cell = 0; cell < field.size(); ++cell) {
        if (field[cell] > 0.0) out.set_cell(cell, std::clamp(field[cell], 0.0, 1.0));
    }
    return out;
}

HeightMap generate_island(const LayoutSpec &layout, std::span<const HeightMap> textures, const PlacementSpec &placement) {
    if (textures.empty()) {
        throw std::invalid_argument("generate_island needs at least one texture");
    }
    const HeightMap upscaled = upscale_layout(layout);
    const auto placements = plan_placements(upscaled, textures.size(), placement);
    return stamp_textures(upscaled.box(), textures, placements, placement.combine);
}

std::map<Coord, TerrainCell> voxelize(const HeightMap &height, std::uint32_t bands, const VoxelOptions &options) {
    if (bands == 0) {
        throw std::invalid_argument("voxelize needs at least one band");
    }
    std::map<Coord, TerrainCell> out;
    const Box &box = height.box();
    for (std::size_t cell = 0; cell < box.cell_count(); ++cell) {
        const double scaled = std::clamp(height.at_cell(cell), 0.0, 1.0) * bands;
        double level = std::floor(scaled);
        double residual = scaled - level;
        if (level >= bands) {
            level = bands - 1;
            residual = std::nextafter(1.0, 0.0);
        }
        TerrainCell tc;
        tc.level = static_cast<std::uint32_t>(level);
        tc.residual = residual;
        const double lower = level / bands;
        const bool eligible = lower >= options.object_min_height - 1e-12 && lower < options.object_max_height - 1e-12;
        if (eligible && residual < options.object_threshold) tc.object = Feature::tree;
        out.emplace_hint(out.end(), box.coord_of(cell), tc);
    }
    return out;
}

Palette default_palette() {
    return {
        {0.12, 0.33, 0.75},  // water
        {0.90, 0.84, 0.56},  // sand
        {0.30, 0.62, 0.22},  // grass
        {0.48, 0.45, 0.42},  // rock
        {1.00, 1.00, 1.00},  // snow
    };
}

std::size_t band_of(double v, std::size_t bands) {
    const double scaled = std::floor(std::clamp(v, 0.0, 1.0) * static_cast<double>(bands));
    return std::min(static_cast<std::size_t>(scaled), bands - 1);
}

ColorImage colorize(const HeightMap &height, const Palette &palette) {
    if (palette.empty()) {
        throw std::invalid_argument("palette must not be empty");
    }
    ColorImage out(height.box());
    for (std::size_t cell = 0; cell < height.box().cell_count(); ++cell) {
        const Rgb &c = palette[band_of(height.at_cell(cell), palette.size())];
        out.red.set_cell(cell, c.r);
        out.green.set_cell(cell, c.g);
        out.blue.set_cell(cell, c.b);
    }
    return out;
}

}  // namespace qblur::terrain
