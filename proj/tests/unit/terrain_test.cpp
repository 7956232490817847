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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace qblur;
using namespace qblur::terrain;

namespace {

constexpr double kPi = std::numbers::pi;

HeightMap constant_layout(std::uint32_t side, double v) {
    HeightMap h = HeightMap::square(side);
    for (std::size_t c = 0; c < h.box().cell_count(); ++c) h.set_cell(c, v);
    return h;
}

HeightMap radial_layout() {
    HeightMap h = HeightMap::square(8);
    for (std::uint32_t x = 0; x < 8; ++x) {
        for (std::uint32_t y = 0; y < 8; ++y) {
            const double r = std::hypot(x - 3.5, y - 3.5) / 4.0;
            if (r < 1.0) h.set({x, y}, 1.0 - r);
        }
    }
    return h;
}

std::vector<double> sorted_values(const HeightMap &h) {
    std::vector<double> v;
    for (const auto &[c, x] : h.cells()) v.push_back(x);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(SeedImage, Basics) {
    const auto one = random_seed_image({16, 1, 4});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.cells().begin()->second, 1.0);

    EXPECT_EQ(random_seed_image({16, 12, 9}), random_seed_image({16, 12, 9}));
    EXPECT_EQ(random_seed_image({16, 12, 9}).size(), 12u);

    const auto full = random_seed_image({5, 25, 1});
    EXPECT_EQ(full.size(), 25u);
    for (const auto &[c, v] : full.cells()) EXPECT_EQ(v, 1.0);

    EXPECT_THROW(random_seed_image({4, 17, 0}), std::invalid_argument);
    EXPECT_THROW(random_seed_image({4, 0, 0}), std::invalid_argument);
}

TEST(Textures, IdentityVariantEqualsBlur) {
    const auto seed = random_seed_image({8, 5, 2});
    const std::vector<HypercubeAutomorphism> identity{HypercubeAutomorphism::identity(6)};
    const auto variants = texture_variants(seed, 0.3, identity);
    ASSERT_EQ(variants.size(), 1u);
    EXPECT_EQ(variants[0], blur(seed, 0.3, make_grid(8)));
}

TEST(Textures, OneSimulationForManyVariants) {
    const auto seed = random_seed_image({16, 12, 3});
    const auto before = qsim::simulation_count();
    const auto variants = texture_variants(seed, 0.15 * kPi, 40, 5);
    EXPECT_EQ(qsim::simulation_count() - before, 1u);
    EXPECT_EQ(variants.size(), 40u);
}

TEST(Textures, VariantsShareValueMultiset) {
    const auto seed = random_seed_image({16, 12, 3});
    const auto variants = texture_variants(seed, 0.2 * kPi, 10, 6);
    const auto reference = sorted_values(variants[0]);
    bool any_differs = false;
    for (const auto &v : variants) {
        EXPECT_EQ(sorted_values(v), reference);
        any_differs |= !(v == variants[0]);
    }
    EXPECT_TRUE(any_differs);
}

TEST(Textures, DeterministicPerSeed) {
    const auto seed = random_seed_image({8, 6, 3});
    EXPECT_EQ(texture_variants(seed, 0.4, 5, 11), texture_variants(seed, 0.4, 5, 11));
}

TEST(Upscale, Examples) {
    HeightMap one = HeightMap::square(1);
    one.set({0, 0}, 1.0);
    const auto u1 = upscale_layout({one, 4, 4});
    EXPECT_EQ(u1.size(), 16u);

    HeightMap two = HeightMap::square(2);
    two.set({0, 0}, 0.1);
    two.set({1, 0}, 0.2);
    two.set({0, 1}, 0.3);
    two.set({1, 1}, 0.4);
    const auto u2 = upscale_layout({two, 4, 4});
    for (std::uint32_t x = 0; x < 4; ++x)
        for (std::uint32_t y = 0; y < 4; ++y) EXPECT_EQ(u2.at({x, y}), two.at({x / 2, y / 2}));

    HeightMap ten = HeightMap::square(10);
    for (std::uint32_t x = 0; x < 10; ++x)
        for (std::uint32_t y = 0; y < 10; ++y) ten.set({x, y}, (x * 10 + y + 1) / 100.0);
    const auto u3 = upscale_layout({ten, 200, 200});
    for (std::uint32_t x = 0; x < 200; ++x)
        for (std::uint32_t y = 0; y < 200; ++y) ASSERT_EQ(u3.at({x, y}), ten.at({x / 20, y / 20}));
}

TEST(Island, ZeroLayoutIsEmpty) {
    const std::vector<HeightMap> tex{random_seed_image({4, 3, 1})};
    const auto island = generate_island({HeightMap::square(10), 50, 50}, tex, {});
    EXPECT_TRUE(island.empty());
}

TEST(Island, SaturatesWithExhaustiveAnchors) {
    HeightMap one = HeightMap::square(1);
    one.set({0, 0}, 1.0);
    HeightMap dot(Box({1, 1}));
    dot.set({0, 0}, 1.0);
    const std::vector<HeightMap> tex{dot};
    PlacementSpec spec;
    spec.attempts = 12 * 9;
    spec.anchors = AnchorMode::exhaustive;
    const auto island = generate_island({one, 12, 9}, tex, spec);
    EXPECT_EQ(island.size(), 108u);
    for (const auto &[c, v] : island.cells()) EXPECT_EQ(v, 1.0);
}

TEST(Island, AcceptanceRateFollowsLayout) {
    const auto layout = upscale_layout({constant_layout(2, 0.3), 50, 50});
    PlacementSpec spec;
    spec.attempts = 100'000;
    spec.seed = 12345;
    const auto placed = plan_placements(layout, 3, spec);
    EXPECT_NEAR(static_cast<double>(placed.size()) / spec.attempts, 0.3, 0.01);
}

TEST(Island, MaxCombineIgnoresOrder) {
    const auto textures = texture_variants(random_seed_image({8, 5, 1}), 0.3, 6, 2);
    const auto layout = upscale_layout({radial_layout(), 64, 64});
    PlacementSpec spec;
    spec.attempts = 400;
    spec.seed = 3;
    auto placements = plan_placements(layout, textures.size(), spec);
    ASSERT_GT(placements.size(), 10u);
    const auto forward = stamp_textures(layout.box(), textures, placements, Combine::max);
    std::reverse(placements.begin(), placements.end());
    EXPECT_EQ(stamp_textures(layout.box(), textures, placements, Combine::max), forward);
}

TEST(Island, ClampedAddStaysInRange) {
    const auto textures = texture_variants(random_seed_image({8, 5, 1}), 0.3, 4, 2);
    PlacementSpec spec;
    spec.attempts = 300;
    spec.combine = Combine::clamped_add;
    const auto island = generate_island({constant_layout(4, 1.0), 40, 40}, textures, spec);
    for (const auto &[c, v] : island.cells()) {
        EXPECT_GT(v, 0.0);
        EXPECT_LE(v, 1.0);
    }
}

TEST(Island, StampIsCentredAndClipped) {
    HeightMap tex(Box({3, 3}));
    tex.set({0, 0}, 0.5);
    tex.set({1, 1}, 1.0);
    tex.set({2, 2}, 0.25);
    const std::vector<HeightMap> textures{tex};
    const std::vector<Placement> at_corner{{0, 0, 0}};
    const auto out = stamp_textures(Box({5, 5}), textures, at_corner, Combine::max);
    EXPECT_EQ(out.size(), 2u);
    EXPECT_EQ(out.at({0, 0}), 1.0);
    EXPECT_EQ(out.at({1, 1}), 0.25);

    const std::vector<HeightMap> huge{HeightMap::square(6)};
    EXPECT_THROW(stamp_textures(Box({5, 5}), huge, at_corner, Combine::max), std::invalid_argument);
}

TEST(Island, DeterministicPerSeed) {
    const auto textures = texture_variants(random_seed_image({8, 5, 1}), 0.3, 4, 2);
    PlacementSpec spec;
    spec.seed = 77;
    EXPECT_EQ(generate_island({constant_layout(5, 0.5), 60, 60}, textures, spec),
              generate_island({constant_layout(5, 0.5), 60, 60}, textures, spec));
}

TEST(Voxelize, Examples) {
    HeightMap h(Box({3, 1}));
    h.set({0, 0}, 0.999);
    h.set({1, 0}, 1.0);
    const auto cells = voxelize(h, 4);
    ASSERT_EQ(cells.size(), 3u);
    EXPECT_EQ(cells.at({0, 0}).level, 3u);
    EXPECT_NEAR(cells.at({0, 0}).residual, 0.996, 1e-12);
    EXPECT_EQ(cells.at({1, 0}).level, 3u);
    EXPECT_LT(cells.at({1, 0}).residual, 1.0);
    EXPECT_EQ(cells.at({1, 0}).object, Feature::none);
    EXPECT_EQ(cells.at({2, 0}).level, 0u);
    EXPECT_EQ(cells.at({2, 0}).residual, 0.0);
    EXPECT_THROW(voxelize(h, 0), std::invalid_argument);
}

TEST(Voxelize, BandsBracketEveryValue) {
    HeightMap h(Box({101, 1}));
    for (std::uint32_t i = 1; i <= 100; ++i) h.set({i, 0}, i / 100.0);
    for (std::uint32_t bands : {1u, 3u, 5u, 7u}) {
        for (const auto &[c, cell] : voxelize(h, bands)) {
            const double v = h.at(c);
            EXPECT_GE(cell.residual, 0.0);
            EXPECT_LT(cell.residual, 1.0);
            if (v < 1.0) {
                EXPECT_LE(cell.level / double(bands), v + 1e-12);
                EXPECT_LT(v, (cell.level + 1) / double(bands));
            }
        }
    }
}

TEST(Voxelize, TreesOnlyOnMiddleBands) {
    HeightMap h(Box({5, 1}));
    h.set({0, 0}, 0.201);  // band 1, small residual: sand, no tree
    h.set({1, 0}, 0.401);  // band 2: grass
    h.set({2, 0}, 0.601);  // band 3: rock
    h.set({3, 0}, 0.801);  // band 4: snow
    h.set({4, 0}, 0.450);  // band 2, large residual
    const auto cells = voxelize(h, 5);
    EXPECT_EQ(cells.at({0, 0}).object, Feature::none);
    EXPECT_EQ(cells.at({1, 0}).object, Feature::tree);
    EXPECT_EQ(cells.at({2, 0}).object, Feature::tree);
    EXPECT_EQ(cells.at({3, 0}).object, Feature::none);
    EXPECT_EQ(cells.at({4, 0}).object, Feature::none);
}

TEST(Colorize, SingleBandIsConstant) {
    HeightMap h = HeightMap::square(3);
    h.set({1, 1}, 0.7);
    const Palette one{{0.2, 0.4, 0.6}};
    const auto img = colorize(h, one);
    for (std::size_t c = 0; c < 9; ++c) {
        EXPECT_EQ(img.red.at_cell(c), 0.2);
        EXPECT_EQ(img.green.at_cell(c), 0.4);
        EXPECT_EQ(img.blue.at_cell(c), 0.6);
    }
    EXPECT_THROW(colorize(h, {}), std::invalid_argument);
}

TEST(Colorize, RampGivesFiveContiguousRegions) {
    HeightMap ramp(Box({100, 1}));
    for (std::uint32_t x = 0; x < 100; ++x) ramp.set({x, 0}, x / 99.0);
    const auto palette = default_palette();
    const auto img = colorize(ramp, palette);
    std::vector<std::size_t> bands;
    for (std::uint32_t x = 0; x < 100; ++x) {
        const Rgb c{img.red.at({x, 0}), img.green.at({x, 0}), img.blue.at({x, 0})};
        const auto it = std::find(palette.begin(), palette.end(), c);
        ASSERT_NE(it, palette.end());
        bands.push_back(static_cast<std::size_t>(it - palette.begin()));
    }
    EXPECT_TRUE(std::is_sorted(bands.begin(), bands.end()));
    EXPECT_EQ(bands.front(), 0u);
    EXPECT_EQ(bands.back(), 4u);
    std::size_t changes = 0;
    for (std::size_t i = 1; i < bands.size(); ++i) changes += bands[i] != bands[i - 1];
    EXPECT_EQ(changes, 4u);
}

TEST(Colorize, BandOfIsMonotone) {
    std::size_t prev = 0;
    for (int i = 0; i <= 1000; ++i) {
        const auto b = band_of(i / 1000.0, 5);
        EXPECT_GE(b, prev);
        prev = b;
    }
    EXPECT_EQ(band_of(1.0, 5), 4u);
    EXPECT_EQ(band_of(0.0, 5), 0u);
}
