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
#include <cstdint>
#include <utility>

#include "qblur/kernels.hpp"

namespace qblur::qsim::kernels::omp {

namespace {

bool wide(std::span<Amplitude> amps) {
    return amps.size() >= (std::size_t{1} << kParallelThresholdQubits);
}

}  // namespace

void apply_single(std::span<Amplitude> amps, unsigned target, const Matrix2 &m) {
    const std::int64_t pairs = static_cast<std::int64_t>(amps.size() / 2);
    const std::uint64_t tbit = std::uint64_t{1} << target;
    Amplitude *data = amps.data();
#pragma omp parallel for schedule(static) if (wide(amps))
    for (std::int64_t k = 0; k < pairs; ++k) {
        const std::uint64_t i0 = insert_zero_bit(static_cast<std::uint64_t>(k), target);
        mix_pair(data[i0], data[i0 | tbit], m);
    }
}

void apply_cx(std::span<Amplitude> amps, unsigned control, unsigned target) {
    const std::int64_t quads = static_cast<std::int64_t>(amps.size() / 4);
    const unsigned lo = std::min(control, target), hi = std::max(control, target);
    const std::uint64_t cbit = std::uint64_t{1} << control;
    const std::uint64_t tbit = std::uint64_t{1} << target;
    Amplitude *data = amps.data();
#pragma omp parallel for schedule(static) if (wide(amps))
    for (std::int64_t k = 0; k < quads; ++k) {
        const std::uint64_t base = insert_two_zero_bits(static_cast<std::uint64_t>(k), lo, hi) | cbit;
        std::swap(data[base], data[base | tbit]);
    }
}

void apply_swap(std::span<Amplitude> amps, unsigned a, unsigned b) {
    const std::int64_t quads = static_cast<std::int64_t>(amps.size() / 4);
    const unsigned lo = std::min(a, b), hi = std::max(a, b);
    const std::uint64_t abit = std::uint64_t{1} << a;
    const std::uint64_t bbit = std::uint64_t{1} << b;
    Amplitude *data = amps.data();
#pragma omp parallel for schedule(static) if (wide(amps))
    for (std::int64_t k = 0; k < quads; ++k) {
        const std::uint64_t base = insert_two_zero_bits(static_cast<std::uint64_t>(k), lo, hi);
        std::swap(data[base | abit], data[base | bbit]);
    }
}

void apply_exchange(std::span<Amplitude> amps, unsigned a, unsigned b, const Matrix2 &m) {
    const std::int64_t quads = static_cast<std::int64_t>(amps.size() / 4);
    const unsigned lo = std::min(a, b), hi = std::max(a, b);
    const std::uint64_t abit = std::uint64_t{1} << a;
    const std::uint64_t bbit = std::uint64_t{1} << b;
    Amplitude *data = amps.data();
#pragma omp parallel for schedule(static) if (wide(amps))
    for (std::int64_t k = 0; k < quads; ++k) {
        const std::uint64_t base = insert_two_zero_bits(static_cast<std::uint64_t>(k), lo, hi);
        mix_pair(data[base | abit], data[base | bbit], m);
    }
}

}  // namespace qblur::qsim::kernels::omp
