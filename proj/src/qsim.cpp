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

#include "qblur/qsim.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qblur/errors.hpp"

namespace qblur::qsim {

namespace {

std::atomic<unsigned> g_cap_override{0};
std::atomic<std::uint64_t> g_simulations{0};

unsigned env_cap() {
    static const unsigned cap = [] {
        const char *raw = std::getenv("QBLUR_MAX_QUBITS");
        if (raw == nullptr || *raw == '\0') return kDefaultMaxQubits;
        char *end = nullptr;
        const unsigned long v = std::strtoul(raw, &end, 10);
        if (*end != '\0' || v == 0 || v > kHardQubitLimit) return kDefaultMaxQubits;
        return static_cast<unsigned>(v);
    }();
    return cap;
}

constexpr double kNormTolerance = 1e-9;

}  // namespace

unsigned max_qubits() {
    const unsigned o = g_cap_override.load(std::memory_order_relaxed);
    return o != 0 ? o : env_cap();
}

void set_max_qubits(unsigned cap) {
    if (cap > kHardQubitLimit) {
        throw std::invalid_argument("qubit cap above the hard limit of " + std::to_string(kHardQubitLimit));
    }
    g_cap_override.store(cap, std::memory_order_relaxed);
}

void check_capacity(unsigned n) {
    if (n == 0 || n > max_qubits()) {
        throw CapacityError("qubit count " + std::to_string(n) + " outside [1, " + std::to_string(max_qubits()) +
                            "] (set QBLUR_MAX_QUBITS to raise the cap)");
    }
}

std::string to_string(const Gate &g) {
    switch (g.kind) {
        case GateKind::rx:
            return "rx(" + std::to_string(g.param) + ") q" + std::to_string(g.q0);
        case GateKind::ry:
            return "ry(" + std::to_string(g.param) + ") q" + std::to_string(g.q0);
        case GateKind::cx:
            return "cx q" + std::to_string(g.q0) + " q" + std::to_string(g.q1);
        case GateKind::swap:
            return "swap q" + std::to_string(g.q0) + " q" + std::to_string(g.q1);
        case GateKind::fswap:
            return "fswap(" + std::to_string(g.param) + ") q" + std::to_string(g.q0) + " q" + std::to_string(g.q1);
    }
    return "?";
}

Matrix2 rx_matrix(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {Amplitude{0, c}, Amplitude{s, 0}, Amplitude{s, 0}, Amplitude{0, c}};
}

Matrix2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {Amplitude{c, 0}, Amplitude{-s, 0}, Amplitude{s, 0}, Amplitude{c, 0}};
}

Matrix2 fswap_block(double fraction) {
    const double phi = std::numbers::pi * fraction;
    const Amplitude e{std::cos(phi), std::sin(phi)};
    const Amplitude same = (1.0 + e) / 2.0;
    const Amplitude cross = (1.0 - e) / 2.0;
    return {same, cross, cross, same};
}

StateVector StateVector::zero(unsigned n) {
    check_capacity(n);
    std::vector<Amplitude> amps(std::size_t{1} << n);
    amps[0] = 1.0;
    return StateVector(n, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw std::invalid_argument("statevector size must be a power of two >= 2");
    }
    const auto n = static_cast<unsigned>(std::countr_zero(amps.size()));
    check_capacity(n);
    double norm = 0.0;
    for (const auto &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("statevector contains a non-finite amplitude");
        }
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw std::invalid_argument("statevector norm " + std::to_string(norm) + " differs from 1");
    }
    return StateVector(n, std::move(amps));
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amps_) total += std::norm(a);
    return total;
}

Circuit::Circuit(unsigned qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count == 0) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
}

Circuit &Circuit::initialize(std::vector<Amplitude> amps) {
    if (amps.size() != (std::size_t{1} << qubit_count_)) {
        throw std::invalid_argument("initial state must have 2^n amplitudes");
    }
    const auto validated = StateVector::from_amplitudes(std::move(amps));
    initial_.emplace(validated.amplitudes().begin(), validated.amplitudes().end());
    return *this;
}

Circuit &Circuit::append(const Gate &gate) {
    validate_gate(gate, qubit_count_);
    gates_.push_back(gate);
    return *this;
}

Circuit &Circuit::ry_all(double theta) {
    for (unsigned q = 0; q < qubit_count_; ++q) ry(q, theta);
    return *this;
}

void validate_gate(const Gate &gate, unsigned qubit_count) {
    if (gate.q0 >= qubit_count || gate.q1 >= qubit_count) {
        throw std::invalid_argument("gate " + to_string(gate) + " addresses a qubit outside [0, " +
                                    std::to_string(qubit_count) + ")");
    }
    if (gate.is_two_qubit() && gate.q0 == gate.q1) {
        throw std::invalid_argument("gate " + to_string(gate) + " needs two distinct qubits");
    }
    if (!std::isfinite(gate.param)) {
        throw std::invalid_argument("gate parameter must be finite");
    }
}

void apply_gate_inplace(StateVector &state, const Gate &gate, Execution exec) {
    validate_gate(gate, state.qubit_count());
    auto amps = state.amplitudes();
    const bool par = exec == Execution::parallel;
    switch (gate.kind) {
        case GateKind::rx:
        case GateKind::ry: {
            const Matrix2 m = gate.kind == GateKind::rx ? rx_matrix(gate.param) : ry_matrix(gate.param);
            par ? kernels::omp::apply_single(amps, gate.q0, m) : kernels::serial::apply_single(amps, gate.q0, m);
            break;
        }
        case GateKind::cx:
            par ? kernels::omp::apply_cx(amps, gate.q0, gate.q1) : kernels::serial::apply_cx(amps, gate.q0, gate.q1);
            break;
        case GateKind::swap:
            par ? kernels::omp::apply_swap(amps, gate.q0, gate.q1)
                : kernels::serial::apply_swap(amps, gate.q0, gate.q1);
            break;
        case GateKind::fswap: {
            const Matrix2 m = fswap_block(gate.param);
            par ? kernels::omp::apply_exchange(amps, gate.q0, gate.q1, m)
                : kernels::serial::apply_exchange(amps, gate.q0, gate.q1, m);
            break;
        }
    }
}

StateVector apply_gate(StateVector state, const Gate &gate, Execution exec) {
    apply_gate_inplace(state, gate, exec);
    return state;
}

StateVector run(const Circuit &circuit, Execution exec) {
    g_simulations.fetch_add(1, std::memory_order_relaxed);
    StateVector state = circuit.initial_state() ? StateVector::from_amplitudes(*circuit.initial_state())
                                                : StateVector::zero(circuit.qubit_count());
    for (const auto &gate : circuit.gates()) {
        apply_gate_inplace(state, gate, exec);
    }
    return state;
}

std::uint64_t simulation_count() {
    return g_simulations.load(std::memory_order_relaxed);
}

std::vector<double> probability_vector(const StateVector &state) {
    std::vector<double> p(state.size());
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amps[i]);
    return p;
}

std::map<BitString, double> probabilities(const StateVector &state, double threshold) {
    std::map<BitString, double> out;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p > threshold) out.emplace(BitString(i, state.qubit_count()), p);
    }
    return out;
}

std::vector<std::uint64_t> sample_histogram(std::span<const double> weights, std::uint64_t shots,
                                            std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    std::size_t last = weights.size();
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) {
            throw std::invalid_argument("sampling weights must be finite and nonnegative");
        }
        if (weights[i] > 0.0) last = i;
    }
    if (last == weights.size()) {
        throw std::invalid_argument("sampling weights are all zero");
    }
    // suffix[i] = sum of weights[i..]; accumulated from the back so each
    // conditional ratio is formed from exact partial sums.
    std::vector<double> suffix(weights.size() + 1, 0.0);
    for (std::size_t i = weights.size(); i-- > 0;) suffix[i] = suffix[i + 1] + weights[i];

    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> hist(weights.size(), 0);
    std::uint64_t remaining = shots;
    for (std::size_t i = 0; i < last && remaining > 0; ++i) {
        if (weights[i] == 0.0) continue;
        const double ratio = weights[i] / suffix[i];
        std::uint64_t draw = remaining;
        if (ratio < 1.0) {
            std::binomial_distribution<std::uint64_t> binom(remaining, ratio);
            draw = binom(rng);
        }
        hist[i] = draw;
        remaining -= draw;
    }
    hist[last] += remaining;
    return hist;
}

Counts sample_counts(const StateVector &state, std::uint64_t shots, std::uint64_t seed) {
    const auto p = probability_vector(state);
    const auto hist = sample_histogram(p, shots, seed);
    Counts counts;
    counts.shots = shots;
    for (std::size_t i = 0; i < hist.size(); ++i) {
        if (hist[i] != 0) counts.values.emplace(BitString(i, state.qubit_count()), hist[i]);
    }
    return counts;
}

std::uint64_t default_shots(unsigned n) {
    if (2 * n >= 64) {
        throw std::invalid_argument("4^n shots overflow for n = " + std::to_string(n));
    }
    return std::uint64_t{1} << (2 * n);
}

}  // namespace qblur::qsim
