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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qblur/bitmapping.hpp"
#include "qblur/kernels.hpp"

namespace qblur::qsim {

/// Default qubit cap (2^22 amplitudes, 64 MiB). The environment variable
/// QBLUR_MAX_QUBITS overrides it, up to kHardQubitLimit.
inline constexpr unsigned kDefaultMaxQubits = 22;
inline constexpr unsigned kHardQubitLimit = 30;

unsigned max_qubits();
/// Overrides the cap for this process; 0 restores the environment/default.
void set_max_qubits(unsigned cap);

/// Throws CapacityError when n is 0 or above max_qubits().
void check_capacity(unsigned n);

/// Probabilities at or below this are dropped from probabilities().
inline constexpr double kDefaultPruneThreshold = 1e-15;

enum class Execution { serial, parallel };

enum class GateKind { rx, ry, cx, swap, fswap };

/// One gate. For rx/ry `param` is the angle in radians; for fswap it is the
/// swap fraction (0 = identity, 1 = SWAP, period 2). For cx, `q0` is the
/// control and `q1` the target.
struct Gate {
    GateKind kind;
    unsigned q0 = 0;
    unsigned q1 = 0;
    double param = 0.0;

    static Gate rx(unsigned q, double theta) { return {GateKind::rx, q, q, theta}; }
    static Gate ry(unsigned q, double theta) { return {GateKind::ry, q, q, theta}; }
    static Gate cx(unsigned control, unsigned target) { return {GateKind::cx, control, target, 0.0}; }
    static Gate swap(unsigned a, unsigned b) { return {GateKind::swap, a, b, 0.0}; }
    static Gate fswap(unsigned a, unsigned b, double fraction) { return {GateKind::fswap, a, b, fraction}; }

    bool is_two_qubit() const { return kind == GateKind::cx || kind == GateKind::swap || kind == GateKind::fswap; }
};

std::string to_string(const Gate &gate);

// Gate matrices with the phase conventions
//   RX(t)|0> = i cos(t/2)|0> + sin(t/2)|1>,   RX(t)|1> = sin(t/2)|0> + i cos(t/2)|1>
//   RY(t)|0> = cos(t/2)|0> + sin(t/2)|1>,     RY(t)|1> = -sin(t/2)|0> + cos(t/2)|1>
Matrix2 rx_matrix(double theta);
Matrix2 ry_matrix(double theta);
/// Action of SWAP^f on span{|01>, |10>}: [[(1+e)/2, (1-e)/2], [(1-e)/2, (1+e)/2]], e = exp(i pi f).
Matrix2 fswap_block(double fraction);

class StateVector {
   public:
    /// |0...0> on n qubits.
    static StateVector zero(unsigned n);
    /// Takes ownership of 2^n amplitudes; throws std::invalid_argument unless
    /// the size is a power of two >= 2 and the norm is 1 within 1e-9.
    static StateVector from_amplitudes(std::vector<Amplitude> amps);

    unsigned qubit_count() const { return qubit_count_; }
    std::size_t size() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::span<Amplitude> amplitudes() { return amps_; }
    const Amplitude &operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;

    friend bool operator==(const StateVector &, const StateVector &) = default;

   private:
    StateVector(unsigned n, std::vector<Amplitude> amps) : qubit_count_(n), amps_(std::move(amps)) {}

    unsigned qubit_count_;
    std::vector<Amplitude> amps_;
};

class Circuit {
   public:
    explicit Circuit(unsigned qubit_count);

    unsigned qubit_count() const { return qubit_count_; }
    const std::optional<std::vector<Amplitude>> &initial_state() const { return initial_; }
    const std::vector<Gate> &gates() const { return gates_; }

    /// Sets the state the gates act on (otherwise |0...0>).
    Circuit &initialize(std::vector<Amplitude> amps);
    Circuit &append(const Gate &gate);
    Circuit &rx(unsigned q, double theta) { return append(Gate::rx(q, theta)); }
    Circuit &ry(unsigned q, double theta) { return append(Gate::ry(q, theta)); }
    Circuit &cx(unsigned control, unsigned target) { return append(Gate::cx(control, target)); }
    Circuit &swap(unsigned a, unsigned b) { return append(Gate::swap(a, b)); }
    Circuit &fswap(unsigned a, unsigned b, double fraction) { return append(Gate::fswap(a, b, fraction)); }
    /// RY(theta) on every qubit, qubit 0 first.
    Circuit &ry_all(double theta);

   private:
    unsigned qubit_count_;
    std::optional<std::vector<Amplitude>> initial_;
    std::vector<Gate> gates_;
};

/// Throws std::invalid_argument for out-of-range or repeated qubit indices
/// and non-finite parameters.
void validate_gate(const Gate &gate, unsigned qubit_count);

void apply_gate_inplace(StateVector &state, const Gate &gate, Execution exec = Execution::parallel);
StateVector apply_gate(StateVector state, const Gate &gate, Execution exec = Execution::parallel);

/// Initial state (or |0...0>) evolved by every gate in order.
StateVector run(const Circuit &circuit, Execution exec = Execution::parallel);

/// Number of run() calls made by this process.
std::uint64_t simulation_count();

/// |c_b|^2 for every index.
std::vector<double> probability_vector(const StateVector &state);

/// |c_b|^2 keyed by bit string, omitting values <= threshold.
std::map<BitString, double> probabilities(const StateVector &state, double threshold = kDefaultPruneThreshold);

struct Counts {
    std::map<BitString, std::uint64_t> values;
    std::uint64_t shots = 0;
};

/// Multinomial draw of `shots` outcomes from `weights` (need not be
/// normalized), returned as a dense histogram. Drawn as a chain of
/// conditional binomials, so the cost is O(weights.size()) for any shot
/// count. Deterministic for a given seed.
std::vector<std::uint64_t> sample_histogram(std::span<const double> weights, std::uint64_t shots, std::uint64_t seed);

Counts sample_counts(const StateVector &state, std::uint64_t shots, std::uint64_t seed);

/// 4^n, the shot count that estimates an n-qubit distribution adequately.
std::uint64_t default_shots(unsigned n);

}  // namespace qblur::qsim
