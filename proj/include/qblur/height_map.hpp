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

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "qblur/bitmapping.hpp"

namespace qblur {

/// Sparse height map over a coordinate box. Absent cells have value 0;
/// storing 0 erases the cell. Values produced by this library lie in (0, 1],
/// but set() accepts any finite nonnegative value so that raw inputs can be
/// normalized later.
class HeightMap {
   public:
    HeightMap() = default;
    explicit HeightMap(Box box) : box_(std::move(box)) {}
    static HeightMap square(std::uint32_t side) { return HeightMap(Box::square(side)); }

    const Box &box() const { return box_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    /// Throws std::out_of_range outside the box, std::invalid_argument for
    /// negative or non-finite values.
    void set(const Coord &c, double value);
    void set_cell(std::size_t cell, double value);
    double at(const Coord &c) const;
    double at_cell(std::size_t cell) const;
    bool contains(const Coord &c) const;

    /// Stored cells keyed by the box's linear cell index.
    const std::map<std::size_t, double> &cells() const { return cells_; }
    std::vector<std::pair<Coord, double>> entries() const;

    double max_value() const;
    double sum() const;
    /// Every value divided by the maximum. Throws std::invalid_argument when empty.
    HeightMap normalized() const;

    friend bool operator==(const HeightMap &, const HeightMap &) = default;

   private:
    Box box_;
    std::map<std::size_t, double> cells_;
};

/// max |a - b| over the union of supports (absent cells count as 0).
/// Throws std::invalid_argument when the boxes differ.
double linf_distance(const HeightMap &a, const HeightMap &b);

/// Three channels over a shared box.
struct ColorImage {
    HeightMap red;
    HeightMap green;
    HeightMap blue;

    ColorImage() = default;
    ColorImage(HeightMap r, HeightMap g, HeightMap b);
    explicit ColorImage(const Box &box) : red(box), green(box), blue(box) {}

    const Box &box() const { return red.box(); }

    friend bool operator==(const ColorImage &, const ColorImage &) = default;
};

}  // namespace qblur
