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

#include <cmath>
#include <numbers>
#include <random>

#include "qblur/qsim.hpp"

namespace test_oracle {

using qblur::qsim::Amplitude;

inline qblur::qsim::StateVector random_state(unsigned n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<Amplitude> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &a : amps) {
        a = {normal(rng), normal(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) a /= std::sqrt(norm);
    return qblur::qsim::StateVector::from_amplitudes(std::move(amps));
}

// Any gate kind valid on n qubits; two-qubit kinds need n >= 2.
inline qblur::qsim::Gate random_gate(unsigned n, std::mt19937_64 &rng) {
    using qblur::qsim::Gate;
    std::uniform_int_distribution<unsigned> qubit(0, n - 1);
    std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> fraction(-0.5, 1.5);
    const int kinds = n >= 2 ? 5 : 2;
    const int kind = std::uniform_int_distribution<int>(0, kinds - 1)(rng);
    const unsigned a = qubit(rng);
    unsigned b = a;
    while (n >= 2 && b == a) b = qubit(rng);
    switch (kind) {
        case 0:
            return Gate::rx(a, angle(rng));
        case 1:
            return Gate::ry(a, angle(rng));
        case 2:
            return Gate::cx(a, b);
        case 3:
            return Gate::swap(a, b);
        default:
            return Gate::fswap(a, b, fraction(rng));
    }
}

inline qblur::qsim::Circuit random_circuit(unsigned n, std::size_t gates, std::mt19937_64 &rng) {
    qblur::qsim::Circuit c(n);
    const auto init = random_state(n, rng);
    c.initialize({init.amplitudes().begin(), init.amplitudes().end()});
    for (std::size_t i = 0; i < gates; ++i) c.append(random_gate(n, rng));
    return c;
}

}  // namespace test_oracle
