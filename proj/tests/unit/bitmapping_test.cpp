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

#include "qblur/bitmapping.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <set>
#include <stdexcept>

#include "qblur/errors.hpp"

using namespace qblur;

namespace {

std::vector<std::string> strs(const GrayLine &line) {
    std::vector<std::string> out;
    for (const auto &b : line.strings) out.push_back(b.str());
    return out;
}

// All Manhattan-1 pairs of the box, checked against Hamming distance.
void expect_neighbours_adjacent(const GridMapping &m) {
    const auto &box = m.box();
    for (std::size_t cell = 0; cell < box.cell_count(); ++cell) {
        const Coord c = box.coord_of(cell);
        for (std::size_t axis = 0; axis < box.rank(); ++axis) {
            if (c[axis] + 1 >= box.side(axis)) continue;
            auto axes = c.axes();
            ++axes[axis];
            const Coord n(axes);
            ASSERT_EQ(hamming_distance(m.bits_for(c), m.bits_for(n)), 1u) << c.str() << " " << n.str();
        }
    }
}

}  // namespace

TEST(BitString, ParseAndPrint) {
    const auto b = BitString::parse("0110");
    EXPECT_EQ(b.width(), 4u);
    EXPECT_EQ(b.value(), 6u);
    EXPECT_EQ(b.str(), "0110");
    EXPECT_EQ(BitString(5, 3).str(), "101");
    EXPECT_THROW(BitString::parse("01a"), std::invalid_argument);
    EXPECT_THROW(BitString(4, 2), std::invalid_argument);
}

TEST(BitString, HammingAndConcat) {
    EXPECT_EQ(hamming_distance(BitString::parse("0000"), BitString::parse("1011")), 3u);
    EXPECT_EQ(concat(BitString::parse("10"), BitString::parse("01")).str(), "1001");
    EXPECT_THROW(hamming_distance(BitString::parse("0"), BitString::parse("00")), std::invalid_argument);
}

TEST(MakeLine, SmallCases) {
    EXPECT_EQ(strs(make_line(2)), (std::vector<std::string>{"0", "1"}));
    EXPECT_EQ(strs(make_line(4)), (std::vector<std::string>{"00", "10", "11", "01"}));
    EXPECT_EQ(strs(make_line(3)), (std::vector<std::string>{"00", "10", "11", "01"}));
    EXPECT_EQ(make_line(5).size(), 8u);
}

TEST(MakeLine, RejectsShortLengths) {
    EXPECT_THROW(make_line(0), std::invalid_argument);
    EXPECT_THROW(make_line(1), std::invalid_argument);
}

TEST(MakeLine, GrayPropertyUpToWidthTen) {
    for (unsigned w = 1; w <= 10; ++w) {
        const auto line = make_line(std::uint64_t{1} << w);
        ASSERT_EQ(line.size(), std::size_t{1} << w);
        ASSERT_EQ(line.width(), w);
        std::set<std::uint64_t> seen;
        for (std::size_t i = 0; i < line.size(); ++i) {
            seen.insert(line[i].value());
            if (i > 0) ASSERT_EQ(hamming_distance(line[i - 1], line[i]), 1u) << "w=" << w << " i=" << i;
        }
        EXPECT_EQ(seen.size(), line.size());
    }
}

TEST(MakeGrid, TwoByTwo) {
    const std::map<BitString, Coord> expected{
        {BitString::parse("00"), {0, 0}},
        {BitString::parse("01"), {0, 1}},
        {BitString::parse("10"), {1, 0}},
        {BitString::parse("11"), {1, 1}},
    };
    EXPECT_EQ(make_grid(2).forward(), expected);
}

TEST(MakeGrid, FourByFourFillsHypercube) {
    const auto m = make_grid(4);
    EXPECT_EQ(m.qubit_count(), 4u);
    const auto fwd = m.forward();
    ASSERT_EQ(fwd.size(), 16u);
    for (std::uint64_t k = 0; k < 16; ++k) EXPECT_TRUE(fwd.contains(BitString(k, 4)));
    EXPECT_EQ(hamming_distance(m.bits_for({1, 1}), m.bits_for({1, 2})), 1u);
    EXPECT_EQ(m.bits_for({2, 2}).str(), "1111");
}

TEST(MakeGrid, NonPowerOfTwoOmitsKeys) {
    const auto m = make_grid(3);
    EXPECT_EQ(m.qubit_count(), 4u);
    EXPECT_EQ(m.forward().size(), 9u);
    std::size_t absent = 0;
    for (std::uint64_t k = 0; k < 16; ++k) absent += m.contains(BitString(k, 4)) ? 0 : 1;
    EXPECT_EQ(absent, 7u);
    EXPECT_FALSE(m.coord_for(BitString::parse("0001")).has_value());
}

TEST(MakeGrid, RejectsSmallSides) {
    EXPECT_THROW(make_grid(1), std::invalid_argument);
    EXPECT_THROW(make_grid(0), std::invalid_argument);
}

TEST(MakeGrid, ManhattanOneIsHammingOneForAllSides) {
    for (std::uint32_t side = 2; side <= 32; ++side) {
        SCOPED_TRACE(side);
        const auto m = make_grid(side);
        std::uint32_t width = 0;
        while ((1u << width) < side) ++width;
        EXPECT_EQ(m.qubit_count(), 2 * width);
        EXPECT_EQ(m.forward().size(), std::size_t{side} * side);
        expect_neighbours_adjacent(m);
    }
}

TEST(MakeGrid, RoundTrip) {
    for (std::uint32_t side : {2u, 5u, 8u, 13u}) {
        const auto m = make_grid(side);
        for (const auto &[bits, coord] : m.forward()) {
            EXPECT_EQ(m.bits_for(coord), bits);
            EXPECT_EQ(m.coord_for(m.bits_for(coord)), coord);
        }
    }
}

TEST(MakeGrid, OutOfBoxCoordinateThrows) {
    const auto m = make_grid(4);
    EXPECT_THROW(m.bits_for({4, 0}), std::out_of_range);
    EXPECT_THROW(m.bits_for({0}), std::out_of_range);
}

TEST(MakeLattice, Cases) {
    const std::map<BitString, Coord> one_d{{BitString::parse("0"), {0}}, {BitString::parse("1"), {1}}};
    EXPECT_EQ(make_lattice({2}).forward(), one_d);
    EXPECT_EQ(make_lattice({2, 2}), make_grid(2));

    const auto m = make_lattice({4, 2, 2});
    EXPECT_EQ(m.qubit_count(), 4u);
    EXPECT_EQ(m.forward().size(), 16u);
    expect_neighbours_adjacent(m);

    EXPECT_THROW(make_lattice({}), std::invalid_argument);
    EXPECT_THROW(make_lattice({4, 1}), std::invalid_argument);
}

TEST(MakeLattice, ThreeAxesNonPowerOfTwo) {
    const auto m = make_lattice({3, 5, 2});
    EXPECT_EQ(m.qubit_count(), 2u + 3u + 1u);
    EXPECT_EQ(m.forward().size(), 30u);
    expect_neighbours_adjacent(m);
}

TEST(GridMapping, RejectsDuplicateKeys) {
    EXPECT_THROW(GridMapping(Box({2}), 1, {0, 0}), std::invalid_argument);
    EXPECT_THROW(GridMapping(Box({2}), 1, {0, 2}), std::invalid_argument);
    EXPECT_THROW(GridMapping(Box({2}), 1, {0}), std::invalid_argument);
}

TEST(GridMapping, RejectsHugeWidth) {
    EXPECT_THROW(make_grid(1u << 16), CapacityError);
}

TEST(Shuffle, DeterministicPerSeed) {
    const auto m = make_grid(8);
    EXPECT_EQ(shuffle_mapping(m, 7), shuffle_mapping(m, 7));
    EXPECT_FALSE(shuffle_mapping(m, 7) == shuffle_mapping(m, 8));
}

TEST(Shuffle, IdentityAutomorphismIsIdentity) {
    const auto m = make_grid(4);
    EXPECT_EQ(apply_automorphism(m, HypercubeAutomorphism::identity(4)), m);
}

TEST(Shuffle, PreservesStructure) {
    for (std::uint32_t side : {4u, 6u, 16u}) {
        const auto m = make_grid(side);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto s = shuffle_mapping(m, seed);
            EXPECT_EQ(s.size(), m.size());
            EXPECT_EQ(s.box(), m.box());
            std::set<Coord> coords;
            for (const auto &[bits, c] : s.forward()) coords.insert(c);
            EXPECT_EQ(coords.size(), m.box().cell_count());
            expect_neighbours_adjacent(s);
        }
    }
}

TEST(Shuffle, AutomorphismIsABijectionOnKeys) {
    const auto a = HypercubeAutomorphism::random(6, 3);
    std::set<std::uint64_t> images;
    for (std::uint64_t k = 0; k < 64; ++k) images.insert(a.apply(k));
    EXPECT_EQ(images.size(), 64u);
    for (std::uint64_t x = 0; x < 64; ++x)
        for (std::uint64_t y = 0; y < 64; ++y)
            ASSERT_EQ(std::popcount(a.apply(x) ^ a.apply(y)), std::popcount(x ^ y));
}
