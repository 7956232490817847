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

#include "qblur/height_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qblur {

void HeightMap::set(const Coord &c, double value) {
    set_cell(box_.cell_of(c), value);
}

void HeightMap::set_cell(std::size_t cell, double value) {
    if (cell >= box_.cell_count()) {
        throw std::out_of_range("cell index outside the height map box");
    }
    if (!std::isfinite(value) || value < 0.0) {
        throw std::invalid_argument("height values must be finite and nonnegative, got " + std::to_string(value));
    }
    if (value == 0.0) {
        cells_.erase(cell);
    } else {
        cells_[cell] = value;
    }
}

double HeightMap::at(const Coord &c) const {
    return at_cell(box_.cell_of(c));
}

double HeightMap::at_cell(std::size_t cell) const {
    const auto it = cells_.find(cell);
    return it == cells_.end() ? 0.0 : it->second;
}

bool HeightMap::contains(const Coord &c) const {
    return box_.contains(c) && cells_.count(box_.cell_of(c)) != 0;
}

std::vector<std::pair<Coord, double>> HeightMap::entries() const {
    std::vector<std::pair<Coord, double>> out;
    out.reserve(cells_.size());
    for (const auto &[cell, v] : cells_) out.emplace_back(box_.coord_of(cell), v);
    return out;
}

double HeightMap::max_value() const {
    double m = 0.0;
    for (const auto &[cell, v] : cells_) m = std::max(m, v);
    return m;
}

double HeightMap::sum() const {
    double s = 0.0;
    for (const auto &[cell, v] : cells_) s += v;
    return s;
}

HeightMap HeightMap::normalized() const {
    if (cells_.empty()) {
        throw std::invalid_argument("cannot normalize an empty height map");
    }
    const double m = max_value();
    HeightMap out(box_);
    for (const auto &[cell, v] : cells_) out.cells_.emplace_hint(out.cells_.end(), cell, v / m);
    return out;
}

double linf_distance(const HeightMap &a, const HeightMap &b) {
    if (!(a.box() == b.box())) {
        throw std::invalid_argument("linf_distance: boxes differ");
    }
    double d = 0.0;
    for (const auto &[cell, v] : a.cells()) d = std::max(d, std::abs(v - b.at_cell(cell)));
    for (const auto &[cell, v] : b.cells()) d = std::max(d, std::abs(v - a.at_cell(cell)));
    return d;
}

ColorImage::ColorImage(HeightMap r, HeightMap g, HeightMap b)
    : red(std::move(r)), green(std::move(g)), blue(std::move(b)) {
    if (!(red.box() == green.box()) || !(red.box() == blue.box())) {
        throw std::invalid_argument("color channels must share one box");
    }
}

}  // namespace qblur
