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

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qblur/bitmapping.hpp"
#include "qblur/height_map.hpp"
#include "qblur/qsim.hpp"

namespace qblur {

enum class DecodeMode { exact, sampled };
enum class DisplayTransform { linear, logarithmic };

struct DecodeOptions {
    DecodeMode mode = DecodeMode::exact;
    /// Sampled mode only; unset means 4^n for an n-qubit circuit.
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;
    DisplayTransform display = DisplayTransform::linear;
    double log_decades = 5.0;
    /// Exact-mode probabilities at or below this are treated as zero.
    double prune_threshold = qsim::kDefaultPruneThreshold;
    qsim::Execution execution = qsim::Execution::parallel;
};

struct EncodingContext {
    GridMapping mapping;
    /// Sum of the encoded heights.
    double total;
    unsigned qubit_count;
};

struct Encoding {
    qsim::Circuit circuit;
    EncodingContext context;
};

/// Amplitude sqrt(h / H) at the key of every stored coordinate, H = sum of h.
std::vector<qsim::Amplitude> encode_amplitudes(const HeightMap &height, const GridMapping &mapping, double *total = nullptr);

/// Circuit initialized to the encoding of `height`, with no gates.
/// Errors: empty map -> std::invalid_argument; coordinate outside the
/// mapping's box -> std::out_of_range; negative value -> std::invalid_argument.
Encoding height_to_circuit(const HeightMap &height, const GridMapping &mapping);

/// Turns per-key weights (probabilities or counts) into a height map over the
/// mapping's box: keys without a coordinate are dropped, the rest are divided
/// by the largest kept weight, then the display transform is applied.
/// Weights at or below `floor` count as zero. Throws DegenerateOutputError
/// when nothing is kept.
HeightMap decode_weights(std::span<const double> weights, const GridMapping &mapping, DisplayTransform display,
                         double log_decades, double floor = 0.0);

/// Probabilities (exact) or a seeded multinomial histogram (sampled) of `state`.
std::vector<double> readout_weights(const qsim::StateVector &state, const DecodeOptions &options);

HeightMap circuit_to_height(const qsim::Circuit &circuit, const EncodingContext &context, const DecodeOptions &options);

/// Encode, RY(theta) on every qubit, decode.
HeightMap blur(const HeightMap &height, double theta, const GridMapping &mapping, const DecodeOptions &options = {});

/// Register marginals of the two-register fractional-swap circuit, as
/// probabilities over each register's keys (each sums to 1).
struct TransitionMarginals {
    std::vector<double> a;
    std::vector<double> b;
};

/// Register A holds `a` on qubits [0, n), register B holds `b` on [n, 2n);
/// FSWAP(fraction) acts on every pair (i, n + i).
qsim::Circuit transition_circuit(const HeightMap &a, const HeightMap &b, double fraction, const GridMapping &mapping);

TransitionMarginals transition_marginals(const HeightMap &a, const HeightMap &b, double fraction,
                                         const GridMapping &mapping, const DecodeOptions &options = {});

/// Images decoded from each register's marginal distribution.
std::pair<HeightMap, HeightMap> transition(const HeightMap &a, const HeightMap &b, double fraction,
                                           const GridMapping &mapping, const DecodeOptions &options = {});

/// blur() per channel; empty channels pass through unchanged.
ColorImage blur_color(const ColorImage &image, double theta, const GridMapping &mapping,
                      const DecodeOptions &options = {});

/// v -> max(0, 1 + log10(v) / decades); values mapped to 0 are removed.
HeightMap apply_log_display(const HeightMap &height, double decades);

}  // namespace qblur
