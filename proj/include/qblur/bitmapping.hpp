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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qblur {

/// Fixed-width binary string. The leftmost character is the most significant
/// bit of value(), so BitString::parse("10").value() == 2.
class BitString {
   public:
    static constexpr unsigned kMaxWidth = 64;

    BitString(std::uint64_t value, unsigned width);
    static BitString parse(std::string_view text);

    unsigned width() const { return width_; }
    std::uint64_t value() const { return value_; }
    std::string str() const;

    friend auto operator<=>(const BitString &, const BitString &) = default;

   private:
    std::uint64_t value_;
    unsigned width_;
};

/// Number of differing positions. Both strings must have the same width.
unsigned hamming_distance(const BitString &a, const BitString &b);

/// `high` followed by `low`, i.e. the string concatenation high + low.
BitString concat(const BitString &high, const BitString &low);

/// Lattice coordinate; one entry per axis.
class Coord {
   public:
    Coord() = default;
    Coord(std::initializer_list<std::uint32_t> axes) : axes_(axes) {}
    explicit Coord(std::vector<std::uint32_t> axes) : axes_(std::move(axes)) {}

    std::size_t rank() const { return axes_.size(); }
    std::uint32_t operator[](std::size_t axis) const { return axes_[axis]; }
    const std::vector<std::uint32_t> &axes() const { return axes_; }
    std::string str() const;

    friend auto operator<=>(const Coord &, const Coord &) = default;

   private:
    std::vector<std::uint32_t> axes_;
};

unsigned manhattan_distance(const Coord &a, const Coord &b);

/// Coordinate box [0, side_0) x ... x [0, side_{d-1}). Cells are numbered
/// row-major with axis 0 most significant.
class Box {
   public:
    Box() = default;
    explicit Box(std::vector<std::uint32_t> sides);
    static Box square(std::uint32_t side) { return Box({side, side}); }

    std::size_t rank() const { return sides_.size(); }
    const std::vector<std::uint32_t> &sides() const { return sides_; }
    std::uint32_t side(std::size_t axis) const { return sides_[axis]; }
    std::size_t cell_count() const { return cell_count_; }

    bool contains(const Coord &c) const;
    /// Throws std::out_of_range when `c` lies outside the box.
    std::size_t cell_of(const Coord &c) const;
    Coord coord_of(std::size_t cell) const;

    friend bool operator==(const Box &, const Box &) = default;

   private:
    std::vector<std::uint32_t> sides_;
    std::size_t cell_count_ = 0;
};

/// Ordering of 2^w bit strings in which consecutive entries differ in one bit.
struct GrayLine {
    std::vector<BitString> strings;

    unsigned width() const { return strings.front().width(); }
    std::size_t size() const { return strings.size(); }
    const BitString &operator[](std::size_t i) const { return strings[i]; }
};

/// Bijection between the cells of a coordinate box and a subset of the
/// n-bit strings. Keys are stored as integer indices of the bit strings.
class GridMapping {
   public:
    static constexpr std::uint64_t kNoCell = ~std::uint64_t{0};
    static constexpr unsigned kMaxQubits = 30;

    /// `key_of_cell[c]` is the key for cell c of `box`. Keys must be
    /// distinct and < 2^qubit_count.
    GridMapping(Box box, unsigned qubit_count, std::vector<std::uint64_t> key_of_cell);

    const Box &box() const { return box_; }
    unsigned qubit_count() const { return qubit_count_; }
    std::size_t size() const { return key_of_cell_.size(); }
    std::uint64_t key_space() const { return std::uint64_t{1} << qubit_count_; }

    /// Cell for a key, or kNoCell when the key has no coordinate.
    std::uint64_t cell_for_key(std::uint64_t key) const { return cell_of_key_[key]; }
    std::uint64_t key_for_cell(std::size_t cell) const { return key_of_cell_[cell]; }
    bool contains(const BitString &bits) const;

    std::optional<Coord> coord_for(const BitString &bits) const;
    BitString bits_for(const Coord &c) const;

    /// The mapping as an associative container, bit string -> coordinate.
    std::map<BitString, Coord> forward() const;

    friend bool operator==(const GridMapping &a, const GridMapping &b) {
        return a.box_ == b.box_ && a.qubit_count_ == b.qubit_count_ && a.key_of_cell_ == b.key_of_cell_;
    }

   private:
    Box box_;
    unsigned qubit_count_;
    std::vector<std::uint64_t> key_of_cell_;
    std::vector<std::uint64_t> cell_of_key_;
};

/// Gray line of width ceil(log2(length)), built by repeated doubling:
/// the previous list with '0' appended, followed by the reversed list with
/// '1' appended. Throws std::invalid_argument when length < 2.
GrayLine make_line(std::uint64_t length);

/// L x L mapping where (x, y) has key line[x] + line[y].
GridMapping make_grid(std::uint32_t side);

/// d-dimensional mapping; the key for (x_0, ..., x_{d-1}) concatenates the
/// per-axis Gray strings with axis 0 leftmost.
GridMapping make_lattice(const std::vector<std::uint32_t> &sides);

/// Hypercube automorphism: bit i of a key moves to bit permutation[i]
/// (positions counted from the least significant bit), then the result is
/// XORed with mask.
struct HypercubeAutomorphism {
    std::vector<unsigned> permutation;
    std::uint64_t mask = 0;

    static HypercubeAutomorphism identity(unsigned width);
    static HypercubeAutomorphism random(unsigned width, std::uint64_t seed);

    std::uint64_t apply(std::uint64_t key) const;
};

/// Re-keys every cell with the transformed key of its original bit string.
GridMapping apply_automorphism(const GridMapping &mapping, const HypercubeAutomorphism &automorphism);

/// apply_automorphism with HypercubeAutomorphism::random(qubit_count, seed).
GridMapping shuffle_mapping(const GridMapping &mapping, std::uint64_t seed);

}  // namespace qblur
