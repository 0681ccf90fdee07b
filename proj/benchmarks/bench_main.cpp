// Copyright 2026 The entverify Authors
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

#include "entverify/entverify.hpp"

namespace {

using namespace entverify;

void BM_EnumerateClifford(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_clifford(d).size());
    }
}
BENCHMARK(BM_EnumerateClifford)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_TOfPovmMub(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    RankOnePovm m = mub_povm(mub_prime(d));
    for (auto _ : state) {
        benchmark::DoNotOptimize(t_of_povm(m).matrix().data());
    }
}
BENCHMARK(BM_TOfPovmMub)->Arg(3)->Arg(7)->Arg(11);

void BM_TOfPovmClifford(benchmark::State &state) {
    RankOnePovm m = clifford_povm(enumerate_clifford(3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(t_of_povm(m).matrix().data());
    }
}
BENCHMARK(BM_TOfPovmClifford)->Unit(benchmark::kMillisecond);

void BM_SearchFiducial(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    FiducialSearchConfig cfg;
    cfg.restarts = 10;
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_fiducial(d, cfg).residual);
    }
}
BENCHMARK(BM_SearchFiducial)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_RunProtocol(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    RankOnePovm m = wh_orbit(known_fiducial(d));
    BipartiteState s = isotropic_state(d, 0.9);
    const auto shots = static_cast<std::uint64_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_protocol(m, s, shots, 1).estimate);
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_RunProtocol)->Args({2, 100000})->Args({3, 100000})->Unit(benchmark::kMillisecond);

void BM_EigenHermitian(benchmark::State &state) {
    Matrix t = t_inv2(static_cast<int>(state.range(0))).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigen_hermitian(t).eigenvalues.data());
    }
}
BENCHMARK(BM_EigenHermitian)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
