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

#include <benchmark/benchmark.h>

#include <vector>

#include "qblur/kernels.hpp"
#include "qblur/qsim.hpp"

namespace {

using namespace qblur::qsim;
namespace k = qblur::qsim::kernels;

std::vector<Amplitude> make_state(unsigned n) {
    std::vector<Amplitude> amps(std::size_t{1} << n);
    const double v = 1.0 / std::sqrt(static_cast<double>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = {v, (i & 1) ? -v : v};
    return amps;
}

template <void (*Apply)(std::span<Amplitude>, unsigned, const Matrix2 &)>
void BM_Single(benchmark::State &state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const auto target = static_cast<unsigned>(state.range(1));
    auto amps = make_state(n);
    const Matrix2 m = ry_matrix(0.3);
    for (auto _ : state) {
        Apply(amps, target, m);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <void (*Apply)(std::span<Amplitude>, unsigned, unsigned, const Matrix2 &)>
void BM_Exchange(benchmark::State &state) {
    const auto n = static_cast<unsigned>(state.range(0));
    auto amps = make_state(n);
    const Matrix2 m = fswap_block(0.5);
    for (auto _ : state) {
        Apply(amps, 1, n - 1, m);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

void BM_RyAll(benchmark::State &state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const auto exec = state.range(1) == 0 ? Execution::serial : Execution::parallel;
    Circuit c(n);
    c.ry_all(0.3);
    for (auto _ : state) benchmark::DoNotOptimize(run(c, exec));
    state.SetLabel(exec == Execution::serial ? "serial" : "parallel");
}

void single_args(benchmark::internal::Benchmark *b) {
    for (int n : {16, 20})
        for (int t : {0, n / 2, n - 1}) b->Args({n, t});
}

BENCHMARK_TEMPLATE(BM_Single, k::serial::apply_single)->Apply(single_args)->Unit(benchmark::kMicrosecond);
BENCHMARK_TEMPLATE(BM_Single, k::omp::apply_single)->Apply(single_args)->Unit(benchmark::kMicrosecond);
BENCHMARK_TEMPLATE(BM_Exchange, k::serial::apply_exchange)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK_TEMPLATE(BM_Exchange, k::omp::apply_exchange)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RyAll)->ArgsProduct({{16, 18, 20}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
