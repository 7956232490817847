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
 * Island pipeline: a random seed image is blurred once, decoded through many
 * shuffled mappings to get texture variants, and the variants are stamped
 * over an upscaled layout with layout-weighted acceptance. The result can be
 * colorized by height band or cut into voxel levels with residuals.
 */
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qblur/bitmapping.hpp"
#include "qblur/blurcore.hpp"
#include "qblur/height_map.hpp"

namespace qblur::terrain {

struct SeedSpec {
    std::uint32_t size = 16;
    std::uint32_t point_count = 12;
    std::uint64_t seed = 0;
};

/// point_count distinct uniformly drawn cells of a size x size box, value 1.
HeightMap random_seed_image(const SeedSpec &spec);

/// Blurs `seed_image` once over make_grid(side) and decodes the single
/// probability vector through `automorphisms.size()` re-keyed mappings.
std::vector<HeightMap> texture_variants(const HeightMap &seed_image, double theta,
                                        std::span<const HypercubeAutomorphism> automorphisms,
                                        const DecodeOptions &options = {});

/// As above with `count` random automorphisms; variant k uses the seed
/// derived from (seed, k).
std::vector<HeightMap> texture_variants(const HeightMap &seed_image, double theta, std::size_t count,
                                        std::uint64_t seed, const DecodeOptions &options = {});

struct LayoutSpec {
    HeightMap layout;
    std::uint32_t target_width = 200;
    std::uint32_t target_height = 200;
};

/// Nearest-neighbour stretch of a 2D layout to target_width x target_height.
HeightMap upscale_layout(const LayoutSpec &spec);

enum class Combine { max, clamped_add };

/// `random` draws each anchor uniformly; `exhaustive` visits cells in
/// row-major order (attempt k uses cell k mod area).
enum class AnchorMode { random, exhaustive };

struct PlacementSpec {
    std::size_t attempts = 1000;
    std::size_t texture_variants = 100;
    std::uint64_t seed = 0;
    Combine combine = Combine::max;
    AnchorMode anchors = AnchorMode::random;
};

struct Placement {
    std::uint32_t x;
    std::uint32_t y;
    std::size_t texture;

    friend bool operator==(const Placement &, const Placement &) = default;
};

/// Accepted stamps for each attempt: an anchor is kept with probability equal
/// to the upscaled layout height there.
std::vector<Placement> plan_placements(const HeightMap &upscaled, std::size_t texture_count,
                                       const PlacementSpec &spec);

/// Stamps every placement, each texture centred on its anchor and clipped at
/// the borders. Values are clamped to [0, 1].
HeightMap stamp_textures(const Box &target, std::span<const HeightMap> textures, std::span<const Placement> placements,
                         Combine combine);

HeightMap generate_island(const LayoutSpec &layout, std::span<const HeightMap> textures, const PlacementSpec &placement);

enum class Feature { none, tree };

struct TerrainCell {
    std::uint32_t level = 0;
    double residual = 0.0;
    Feature object = Feature::none;

    friend bool operator==(const TerrainCell &, const TerrainCell &) = default;
};

struct VoxelOptions {
    /// Trees grow where the residual is below this...
    double object_threshold = 0.03;
    /// ...on levels whose lower edge level/bands is in [min, max).
    double object_min_height = 0.4;
    double object_max_height = 0.8;
};

/// One cell per box coordinate (absent heights are 0). level = floor(v * bands)
/// with v = 1 kept in the top band; residual = v * bands - level.
std::map<Coord, TerrainCell> voxelize(const HeightMap &height, std::uint32_t bands, const VoxelOptions &options = {});

struct Rgb {
    double r;
    double g;
    double b;

    friend bool operator==(const Rgb &, const Rgb &) = default;
};

/// Colors for equal-width height bands, lowest first.
using Palette = std::vector<Rgb>;

/// Water, sand, grass, rock, snow.
Palette default_palette();

/// Band index of a height for a palette of `bands` entries.
std::size_t band_of(double v, std::size_t bands);

/// Colors every coordinate of the box by its height band.
ColorImage colorize(const HeightMap &height, const Palette &palette);

}  // namespace qblur::terrain
