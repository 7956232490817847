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
 * Statevector gate kernels.
 *
 * Every kernel updates amplitudes in place. Qubit q corresponds to bit q of
 * the amplitude index. Two implementations share the signatures below:
 *
 *  - kernels::serial walks the array block by block and is the reference.
 *  - kernels::omp enumerates the independent amplitude pairs (or quads) with
 *    a flat counter and splits that range across OpenMP threads.
 *
 * Both evaluate the same per-pair arithmetic from this header, so their
 * results are bitwise identical.
 */
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>

namespace qblur::qsim {

using Amplitude = std::complex<double>;

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Amplitude, 4>;

namespace kernels {

/// Index with a zero bit inserted at `bit`, shifting higher bits up.
inline std::uint64_t insert_zero_bit(std::uint64_t k, unsigned bit) {
    const std::uint64_t low = k & ((std::uint64_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

/// Index with zero bits inserted at `lo` and `hi` (lo < hi).
inline std::uint64_t insert_two_zero_bits(std::uint64_t k, unsigned lo, unsigned hi) {
    return insert_zero_bit(insert_zero_bit(k, lo), hi);
}

/// (a0, a1) <- m * (a0, a1). Written without complex operator* so that the
/// rounding is the same in every caller.
inline void mix_pair(Amplitude &a0, Amplitude &a1, const Matrix2 &m) {
    const double r0 = a0.real(), i0 = a0.imag();
    const double r1 = a1.real(), i1 = a1.imag();
    const double nr0 = (m[0].real() * r0 - m[0].imag() * i0) + (m[1].real() * r1 - m[1].imag() * i1);
    const double ni0 = (m[0].real() * i0 + m[0].imag() * r0) + (m[1].real() * i1 + m[1].imag() * r1);
    const double nr1 = (m[2].real() * r0 - m[2].imag() * i0) + (m[3].real() * r1 - m[3].imag() * i1);
    const double ni1 = (m[2].real() * i0 + m[2].imag() * r0) + (m[3].real() * i1 + m[3].imag() * r1);
    a0 = {nr0, ni0};
    a1 = {nr1, ni1};
}

// Arrays below 2^kParallelThreshold amplitudes stay on one thread.
inline constexpr unsigned kParallelThresholdQubits = 14;

namespace serial {
void apply_single(std::span<Amplitude> amps, unsigned target, const Matrix2 &m);
void apply_cx(std::span<Amplitude> amps, unsigned control, unsigned target);
void apply_swap(std::span<Amplitude> amps, unsigned a, unsigned b);
/// `m` acts on the {|01>, |10>} subspace of qubits (a, b); index order is
/// (bit a set, bit b clear) then (bit a clear, bit b set).
void apply_exchange(std::span<Amplitude> amps, unsigned a, unsigned b, const Matrix2 &m);
}  // namespace serial

namespace omp {
void apply_single(std::span<Amplitude> amps, unsigned target, const Matrix2 &m);
void apply_cx(std::span<Amplitude> amps, unsigned control, unsigned target);
void apply_swap(std::span<Amplitude> amps, unsigned a, unsigned b);
void apply_exchange(std::span<Amplitude> amps, unsigned a, unsigned b, const Matrix2 &m);
}  // namespace omp

}  // namespace kernels
}  // namespace qblur::qsim
