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

#include <algorithm>
#include <random>

#include "qblur/height_map.hpp"

namespace fixtures {

// Ten-point face on an 8 x 8 grid: two eyes, two cheeks, a mouth.
inline qblur::HeightMap face_image() {
    qblur::HeightMap h = qblur::HeightMap::square(8);
    for (auto [x, y] : {std::pair{2u, 5u}, {2u, 6u}, {5u, 6u}, {5u, 5u}, {2u, 1u}, {3u, 1u}, {4u, 1u}, {5u, 1u},
                        {1u, 2u}, {6u, 2u}}) {
        h.set({x, y}, 1.0);
    }
    return h;
}

// (0,0) and (2,2) on a 4 x 4 grid: keys 0000 and 1111.
inline qblur::HeightMap ghz_image() {
    qblur::HeightMap h = qblur::HeightMap::square(4);
    h.set({0, 0}, 1.0);
    h.set({2, 2}, 1.0);
    return h;
}

// Between 1 and min(area, 48) distinct cells with values in [0.05, 1).
inline qblur::HeightMap random_sparse(std::uint32_t side, std::mt19937_64 &rng) {
    qblur::HeightMap h = qblur::HeightMap::square(side);
    const std::size_t area = std::size_t{side} * side;
    const std::size_t count = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(area, 48))(rng);
    std::uniform_int_distribution<std::size_t> cell(0, area - 1);
    std::uniform_real_distribution<double> value(0.05, 1.0);
    while (h.size() < count) h.set_cell(cell(rng), value(rng));
    return h;
}

}  // namespace fixtures
