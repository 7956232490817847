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

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qblur/errors.hpp"

namespace qblur {

namespace {

std::uint64_t low_mask(unsigned width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

unsigned width_for(std::uint64_t length) {
    return static_cast<unsigned>(std::bit_width(length - 1));
}

}  // namespace

BitString::BitString(std::uint64_t value, unsigned width) : value_(value), width_(width) {
    if (width == 0 || width > kMaxWidth) {
        throw std::invalid_argument("bit string width must be in [1, 64], got " + std::to_string(width));
    }
    if ((value & ~low_mask(width)) != 0) {
        throw std::invalid_argument("bit string value does not fit in " + std::to_string(width) + " bits");
    }
}

BitString BitString::parse(std::string_view text) {
    if (text.empty() || text.size() > kMaxWidth) {
        throw std::invalid_argument("bit string must have 1 to 64 characters");
    }
    std::uint64_t value = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string contains a character other than 0/1: '" + std::string(text) + "'");
        }
        value = (value << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BitString(value, static_cast<unsigned>(text.size()));
}

std::string BitString::str() const {
    std::string out(width_, '0');
    for (unsigned i = 0; i < width_; ++i) {
        if ((value_ >> i) & 1) {
            out[width_ - 1 - i] = '1';
        }
    }
    return out;
}

unsigned hamming_distance(const BitString &a, const BitString &b) {
    if (a.width() != b.width()) {
        throw std::invalid_argument("hamming_distance: width mismatch");
    }
    return static_cast<unsigned>(std::popcount(a.value() ^ b.value()));
}

BitString concat(const BitString &high, const BitString &low) {
    const unsigned width = high.width() + low.width();
    if (width > BitString::kMaxWidth) {
        throw std::invalid_argument("concat: combined width exceeds 64 bits");
    }
    return BitString((high.value() << low.width()) | low.value(), width);
}

std::string Coord::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(axes_[i]);
    }
    return out + ")";
}

unsigned manhattan_distance(const Coord &a, const Coord &b) {
    if (a.rank() != b.rank()) {
        throw std::invalid_argument("manhattan_distance: rank mismatch");
    }
    unsigned d = 0;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        d += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    }
    return d;
}

Box::Box(std::vector<std::uint32_t> sides) : sides_(std::move(sides)), cell_count_(1) {
    if (sides_.empty()) {
        throw std::invalid_argument("box needs at least one axis");
    }
    for (auto s : sides_) {
        if (s == 0) {
            throw std::invalid_argument("box sides must be positive");
        }
        cell_count_ *= s;
    }
}

bool Box::contains(const Coord &c) const {
    if (c.rank() != sides_.size()) return false;
    for (std::size_t i = 0; i < sides_.size(); ++i) {
        if (c[i] >= sides_[i]) return false;
    }
    return true;
}

std::size_t Box::cell_of(const Coord &c) const {
    if (!contains(c)) {
        throw std::out_of_range("coordinate " + c.str() + " lies outside the box");
    }
    std::size_t cell = 0;
    for (std::size_t i = 0; i < sides_.size(); ++i) {
        cell = cell * sides_[i] + c[i];
    }
    return cell;
}

Coord Box::coord_of(std::size_t cell) const {
    if (cell >= cell_count_) {
        throw std::out_of_range("cell index outside the box");
    }
    std::vector<std::uint32_t> axes(sides_.size());
    for (std::size_t i = sides_.size(); i-- > 0;) {
        axes[i] = static_cast<std::uint32_t>(cell % sides_[i]);
        cell /= sides_[i];
    }
    return Coord(std::move(axes));
}

GridMapping::GridMapping(Box box, unsigned qubit_count, std::vector<std::uint64_t> key_of_cell)
    : box_(std::move(box)), qubit_count_(qubit_count), key_of_cell_(std::move(key_of_cell)) {
    if (qubit_count_ == 0) {
        throw std::invalid_argument("mapping needs at least one qubit");
    }
    if (qubit_count_ > kMaxQubits) {
        throw CapacityError("mapping needs " + std::to_string(qubit_count_) + " qubits; limit is " +
                            std::to_string(kMaxQubits));
    }
    if (key_of_cell_.size() != box_.cell_count()) {
        throw std::invalid_argument("mapping must assign a key to every cell of its box");
    }
    cell_of_key_.assign(key_space(), kNoCell);
    for (std::size_t cell = 0; cell < key_of_cell_.size(); ++cell) {
        const auto key = key_of_cell_[cell];
        if (key >= key_space()) {
            throw std::invalid_argument("mapping key out of range for " + std::to_string(qubit_count_) + " qubits");
        }
        if (cell_of_key_[key] != kNoCell) {
            throw std::invalid_argument("mapping keys must be distinct");
        }
        cell_of_key_[key] = cell;
    }
}

bool GridMapping::contains(const BitString &bits) const {
    return bits.width() == qubit_count_ && cell_of_key_[bits.value()] != kNoCell;
}

std::optional<Coord> GridMapping::coord_for(const BitString &bits) const {
    if (!contains(bits)) return std::nullopt;
    return box_.coord_of(cell_of_key_[bits.value()]);
}

BitString GridMapping::bits_for(const Coord &c) const {
    return BitString(key_of_cell_[box_.cell_of(c)], qubit_count_);
}

std::map<BitString, Coord> GridMapping::forward() const {
    std::map<BitString, Coord> out;
    for (std::size_t cell = 0; cell < key_of_cell_.size(); ++cell) {
        out.emplace(BitString(key_of_cell_[cell], qubit_count_), box_.coord_of(cell));
    }
    return out;
}

GrayLine make_line(std::uint64_t length) {
    if (length < 2) {
        throw std::invalid_argument("make_line: length must be at least 2");
    }
    const unsigned width = width_for(length);
    if (width > BitString::kMaxWidth - 1) {
        throw std::invalid_argument("make_line: length too large");
    }
    // Integer form of the doubling: appending a character shifts the
    // existing bits up by one.
    std::vector<std::uint64_t> line{0, 1};
    for (unsigned w = 1; w < width; ++w) {
        std::vector<std::uint64_t> next;
        next.reserve(line.size() * 2);
        for (auto s : line) next.push_back(s << 1);
        for (auto it = line.rbegin(); it != line.rend(); ++it) next.push_back((*it << 1) | 1);
        line = std::move(next);
    }
    GrayLine out;
    out.strings.reserve(line.size());
    for (auto s : line) out.strings.emplace_back(s, width);
    return out;
}

GridMapping make_lattice(const std::vector<std::uint32_t> &sides) {
    if (sides.empty()) {
        throw std::invalid_argument("make_lattice: need at least one axis");
    }
    std::vector<GrayLine> lines;
    unsigned qubits = 0;
    for (auto s : sides) {
        if (s < 2) {
            throw std::invalid_argument("make_lattice: every side must be at least 2");
        }
        lines.push_back(make_line(s));
        qubits += lines.back().width();
    }
    if (qubits > GridMapping::kMaxQubits) {
        throw CapacityError("make_lattice: " + std::to_string(qubits) + " qubits exceed the mapping limit");
    }
    Box box(sides);
    std::vector<std::uint64_t> keys(box.cell_count());
    std::vector<std::uint32_t> idx(sides.size(), 0);
    for (std::size_t cell = 0; cell < keys.size(); ++cell) {
        std::uint64_t key = 0;
        for (std::size_t axis = 0; axis < sides.size(); ++axis) {
            key = (key << lines[axis].width()) | lines[axis][idx[axis]].value();
        }
        keys[cell] = key;
        // Row-major odometer, last axis fastest.
        for (std::size_t axis = sides.size(); axis-- > 0;) {
            if (++idx[axis] < sides[axis]) break;
            idx[axis] = 0;
        }
    }
    return GridMapping(std::move(box), qubits, std::move(keys));
}

GridMapping make_grid(std::uint32_t side) {
    if (side < 2) {
        throw std::invalid_argument("make_grid: side must be at least 2");
    }
    return make_lattice({side, side});
}

HypercubeAutomorphism HypercubeAutomorphism::identity(unsigned width) {
    HypercubeAutomorphism a;
    a.permutation.resize(width);
    std::iota(a.permutation.begin(), a.permutation.end(), 0u);
    return a;
}

HypercubeAutomorphism HypercubeAutomorphism::random(unsigned width, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto a = identity(width);
    std::shuffle(a.permutation.begin(), a.permutation.end(), rng);
    a.mask = rng() & low_mask(width);
    return a;
}

std::uint64_t HypercubeAutomorphism::apply(std::uint64_t key) const {
    std::uint64_t out = 0;
    for (unsigned i = 0; i < permutation.size(); ++i) {
        out |= ((key >> i) & 1) << permutation[i];
    }
    return out ^ mask;
}

GridMapping apply_automorphism(const GridMapping &mapping, const HypercubeAutomorphism &automorphism) {
    const unsigned n = mapping.qubit_count();
    if (automorphism.permutation.size() != n) {
        throw std::invalid_argument("automorphism width does not match the mapping");
    }
    std::vector<bool> seen(n, false);
    for (auto p : automorphism.permutation) {
        if (p >= n || seen[p]) {
            throw std::invalid_argument("automorphism permutation is not a permutation of bit positions");
        }
        seen[p] = true;
    }
    if ((automorphism.mask & ~low_mask(n)) != 0) {
        throw std::invalid_argument("automorphism mask wider than the mapping");
    }
    std::vector<std::uint64_t> keys(mapping.size());
    for (std::size_t cell = 0; cell < keys.size(); ++cell) {
        keys[cell] = automorphism.apply(mapping.key_for_cell(cell));
    }
    return GridMapping(mapping.box(), n, std::move(keys));
}

GridMapping shuffle_mapping(const GridMapping &mapping, std::uint64_t seed) {
    return apply_automorphism(mapping, HypercubeAutomorphism::random(mapping.qubit_count(), seed));
}

}  // namespace qblur
