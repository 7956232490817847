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

#include "qblur/blurcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qblur/errors.hpp"

namespace qblur {

std::vector<qsim::Amplitude> encode_amplitudes(const HeightMap &height, const GridMapping &mapping, double *total) {
    if (height.empty()) {
        throw std::invalid_argument("cannot encode an empty height map");
    }
    qsim::check_capacity(mapping.qubit_count());
    const Box &box = mapping.box();
    const bool same_box = height.box() == box;

    double sum = 0.0;
    std::vector<qsim::Amplitude> amps(mapping.key_space());
    for (const auto &[cell, h] : height.cells()) {
        if (!(h > 0.0) || !std::isfinite(h)) {
            throw std::invalid_argument("height values must be positive and finite");
        }
        const std::size_t target = same_box ? cell : box.cell_of(height.box().coord_of(cell));
        amps[mapping.key_for_cell(target)] = std::sqrt(h);
        sum += h;
    }
    const double scale = 1.0 / std::sqrt(sum);
    for (auto &a : amps) a *= scale;
    if (total) *total = sum;
    return amps;
}

Encoding height_to_circuit(const HeightMap &height, const GridMapping &mapping) {
    double total = 0.0;
    auto amps = encode_amplitudes(height, mapping, &total);
    qsim::Circuit circuit(mapping.qubit_count());
    circuit.initialize(std::move(amps));
    return Encoding{std::move(circuit), EncodingContext{mapping, total, mapping.qubit_count()}};
}

HeightMap decode_weights(std::span<const double> weights, const GridMapping &mapping, DisplayTransform display,
                         double log_decades, double floor) {
    if (weights.size() != mapping.key_space()) {
        throw std::invalid_argument("weight vector does not match the mapping's key space");
    }
    double max_kept = 0.0;
    for (std::size_t key = 0; key < weights.size(); ++key) {
        if (weights[key] > floor && mapping.cell_for_key(key) != GridMapping::kNoCell) {
            max_kept = std::max(max_kept, weights[key]);
        }
    }
    if (max_kept <= 0.0) {
        throw DegenerateOutputError("decode kept no weight inside the mapping");
    }
    HeightMap out(mapping.box());
    for (std::size_t key = 0; key < weights.size(); ++key) {
        const auto cell = mapping.cell_for_key(key);
        if (weights[key] > floor && cell != GridMapping::kNoCell) {
            out.set_cell(cell, weights[key] / max_kept);
        }
    }
    if (display == DisplayTransform::logarithmic) {
        return apply_log_display(out, log_decades);
    }
    return out;
}

std::vector<double> readout_weights(const qsim::StateVector &state, const DecodeOptions &options) {
    auto p = qsim::probability_vector(state);
    if (options.mode == DecodeMode::exact) {
        return p;
    }
    const std::uint64_t shots = options.shots.value_or(qsim::default_shots(state.qubit_count()));
    // Counts are used as-is; the max rescale in decode makes dividing by
    // the shot count unnecessary.
    const auto hist = qsim::sample_histogram(p, shots, options.seed);
    return std::vector<double>(hist.begin(), hist.end());
}

namespace {

double floor_for(const DecodeOptions &options) {
    return options.mode == DecodeMode::exact ? options.prune_threshold : 0.0;
}

}  // namespace

HeightMap circuit_to_height(const qsim::Circuit &circuit, const EncodingContext &context, const DecodeOptions &options) {
    if (circuit.qubit_count() != context.qubit_count || context.mapping.qubit_count() != context.qubit_count) {
        throw std::invalid_argument("circuit qubit count does not match the encoding context");
    }
    const auto state = qsim::run(circuit, options.execution);
    const auto weights = readout_weights(state, options);
    return decode_weights(weights, context.mapping, options.display, options.log_decades, floor_for(options));
}

HeightMap blur(const HeightMap &height, double theta, const GridMapping &mapping, const DecodeOptions &options) {
    auto [circuit, context] = height_to_circuit(height, mapping);
    circuit.ry_all(theta);
    return circuit_to_height(circuit, context, options);
}

qsim::Circuit transition_circuit(const HeightMap &a, const HeightMap &b, double fraction, const GridMapping &mapping) {
    if (!(a.box() == b.box())) {
        throw std::invalid_argument("transition images must share one box");
    }
    if (!std::isfinite(fraction)) {
        throw std::invalid_argument("transition fraction must be finite");
    }
    const unsigned n = mapping.qubit_count();
    qsim::check_capacity(2 * n);
    const auto amps_a = encode_amplitudes(a, mapping);
    const auto amps_b = encode_amplitudes(b, mapping);

    const std::size_t dim = amps_a.size();
    std::vector<qsim::Amplitude> joint(dim * dim);
    for (std::size_t kb = 0; kb < dim; ++kb) {
        if (amps_b[kb] == 0.0) continue;
        for (std::size_t ka = 0; ka < dim; ++ka) {
            joint[(kb << n) | ka] = amps_a[ka] * amps_b[kb];
        }
    }
    qsim::Circuit circuit(2 * n);
    circuit.initialize(std::move(joint));
    for (unsigned i = 0; i < n; ++i) circuit.fswap(i, n + i, fraction);
    return circuit;
}

TransitionMarginals transition_marginals(const HeightMap &a, const HeightMap &b, double fraction,
                                         const GridMapping &mapping, const DecodeOptions &options) {
    const auto circuit = transition_circuit(a, b, fraction, mapping);
    const auto state = qsim::run(circuit, options.execution);
    const auto weights = readout_weights(state, options);

    const unsigned n = mapping.qubit_count();
    const std::size_t dim = std::size_t{1} << n;
    TransitionMarginals m{std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0)};
    double total = 0.0;
    for (std::size_t idx = 0; idx < weights.size(); ++idx) {
        m.a[idx & (dim - 1)] += weights[idx];
        m.b[idx >> n] += weights[idx];
        total += weights[idx];
    }
    if (options.mode == DecodeMode::sampled) {
        for (auto &v : m.a) v /= total;
        for (auto &v : m.b) v /= total;
    }
    return m;
}

std::pair<HeightMap, HeightMap> transition(const HeightMap &a, const HeightMap &b, double fraction,
                                           const GridMapping &mapping, const DecodeOptions &options) {
    const auto m = transition_marginals(a, b, fraction, mapping, options);
    const double floor = floor_for(options);
    return {decode_weights(m.a, mapping, options.display, options.log_decades, floor),
            decode_weights(m.b, mapping, options.display, options.log_decades, floor)};
}

ColorImage blur_color(const ColorImage &image, double theta, const GridMapping &mapping, const DecodeOptions &options) {
    auto channel = [&](const HeightMap &c) { return c.empty() ? c : blur(c, theta, mapping, options); };
    ColorImage out;
    out.red = channel(image.red);
    out.green = channel(image.green);
    out.blue = channel(image.blue);
    return out;
}

HeightMap apply_log_display(const HeightMap &height, double decades) {
    if (!(decades > 0.0) || !std::isfinite(decades)) {
        throw std::invalid_argument("log display needs a positive number of decades");
    }
    HeightMap out(height.box());
    for (const auto &[cell, v] : height.cells()) {
        // The cutoff absorbs log10 rounding at exactly 10^-decades.
        const double t = 1.0 + std::log10(v) / decades;
        if (t > 1e-12) out.set_cell(cell, std::min(t, 1.0));
    }
    return out;
}

}  // namespace qblur
