// Copyright 2026 The qmeas Authors
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

// Serial reference vs. OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qmeas/kernels.hpp"

namespace {

using qmeas::kernels::Complex;

std::vector<Complex> random_buffer(std::size_t size, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Complex> v(size);
    for (auto &z : v) {
        z = {g(rng), g(rng)};
    }
    return v;
}

template <auto Fn>
void bm_matmul(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_buffer(n * n, 1);
    const auto b = random_buffer(n * n, 2);
    std::vector<Complex> out(n * n);
    for (auto _ : state) {
        Fn(a, b, out, n);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetComplexityN(state.range(0));
}

template <auto Fn>
void bm_kron(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_buffer(n * n, 3);
    const auto b = random_buffer(n * n, 4);
    std::vector<Complex> out(n * n * n * n);
    for (auto _ : state) {
        Fn(a, n, b, n, out);
        benchmark::DoNotOptimize(out.data());
    }
}

template <auto Fn>
void bm_partial_trace(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_buffer(n * n * n * n, 5);
    std::vector<Complex> out(n * n);
    for (auto _ : state) {
        Fn(a, n, n, out);
        benchmark::DoNotOptimize(out.data());
    }
}

namespace k = qmeas::kernels;

BENCHMARK(bm_matmul<k::serial::matmul>)->Name("matmul/serial")->Arg(16)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(bm_matmul<k::matmul>)->Name("matmul/omp")->Arg(16)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(bm_kron<k::serial::kron>)->Name("kron/serial")->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_kron<k::kron>)->Name("kron/omp")->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_partial_trace<k::serial::partial_trace_p>)->Name("partial_trace_p/serial")->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_partial_trace<k::partial_trace_p>)->Name("partial_trace_p/omp")->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_partial_trace<k::serial::partial_trace_s>)->Name("partial_trace_s/serial")->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_partial_trace<k::partial_trace_s>)->Name("partial_trace_s/omp")->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
