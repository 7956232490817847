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

#include <algorithm>
#include <utility>

#include "qblur/kernels.hpp"

namespace qblur::qsim::kernels::serial {

void apply_single(std::span<Amplitude> amps, unsigned target, const Matrix2 &m) {
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t block = 0; block < amps.size(); block += 2 * stride) {
        for (std::size_t j = block; j < block + stride; ++j) {
            mix_pair(amps[j], amps[j + stride], m);
        }
    }
}

void apply_cx(std::span<Amplitude> amps, unsigned control, unsigned target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps[i], amps[i | tbit]);
        }
    }
}

void apply_swap(std::span<Amplitude> amps, unsigned a, unsigned b) {
    const std::size_t abit = std::size_t{1} << a;
    const std::size_t bbit = std::size_t{1} << b;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & abit) && !(i & bbit)) {
            std::swap(amps[i], amps[(i ^ abit) | bbit]);
        }
    }
}

void apply_exchange(std::span<Amplitude> amps, unsigned a, unsigned b, const Matrix2 &m) {
    const std::size_t abit = std::size_t{1} << a;
    const std::size_t bbit = std::size_t{1} << b;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & abit) && !(i & bbit)) {
            mix_pair(amps[i], amps[(i ^ abit) | bbit], m);
        }
    }
}

}  // namespace qblur::qsim::kernels::serial
