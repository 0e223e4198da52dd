// Copyright 2026 The chkit Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference versus OpenMP kernels. Arg(0) is the serial version;
// Arg(t > 0) runs the parallel one with t threads.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "chkit/classical.hpp"
#include "chkit/events.hpp"
#include "chkit/nogo.hpp"
#include "support/models.hpp"

using namespace chkit;

namespace {

void threads_args(benchmark::internal::Benchmark *b)
{
    b->Arg(0);
    for (int t = 1; t <= omp_get_max_threads(); t *= 2) {
        b->Arg(t);
    }
    b->UseRealTime();
}

void BM_VerifyHomomorphism(benchmark::State &state)
{
    const auto algebra = EventAlgebra::abstract(10);
    const auto f = EventFunction::tabulate(TruthFunctional(algebra, 3));
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        if (threads == 0) {
            benchmark::DoNotOptimize(verify_homomorphism_serial(f));
        } else {
            omp_set_num_threads(threads);
            benchmark::DoNotOptimize(verify_homomorphism(f));
        }
    }
}
BENCHMARK(BM_VerifyHomomorphism)->Apply(threads_args);

void BM_HomomorphismOracle(benchmark::State &state)
{
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        if (threads == 0) {
            benchmark::DoNotOptimize(enumerate_homomorphisms_oracle_serial(4));
        } else {
            omp_set_num_threads(threads);
            benchmark::DoNotOptimize(enumerate_homomorphisms_oracle(4));
        }
    }
}
BENCHMARK(BM_HomomorphismOracle)->Apply(threads_args);

void BM_ClassicalEveryFramework(benchmark::State &state)
{
    testing::Rng rng(5);
    const std::size_t n_points = 10000;
    std::vector<CoarseGraining> grainings;
    for (int g = 0; g < 20; ++g) {
        grainings.push_back(CoarseGraining::from_labels(testing::random_labels(rng, n_points, 30)));
    }
    std::vector<std::size_t> selected;
    for (const auto &g : grainings) {
        selected.push_back(g.cell_of(17));
    }
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        if (threads == 0) {
            benchmark::DoNotOptimize(check_every_framework_classical_serial(grainings, selected));
        } else {
            omp_set_num_threads(threads);
            benchmark::DoNotOptimize(check_every_framework_classical(grainings, selected));
        }
    }
}
BENCHMARK(BM_ClassicalEveryFramework)->Apply(threads_args);

void BM_KsSearch(benchmark::State &state)
{
    const auto rays = builtin_dataset("spin-dirs(14)");
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        if (threads == 0) {
            benchmark::DoNotOptimize(search_assignment_serial(rays, true));
        } else {
            SearchOptions options;
            options.threads = threads;
            options.enumerate_all = true;
            benchmark::DoNotOptimize(search_assignment(rays, options));
        }
    }
}
BENCHMARK(BM_KsSearch)->Apply(threads_args);

void BM_KsPeres(benchmark::State &state)
{
    const auto rays = builtin_dataset("peres24");
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        if (threads == 0) {
            benchmark::DoNotOptimize(search_assignment_serial(rays));
        } else {
            SearchOptions options;
            options.threads = threads;
            benchmark::DoNotOptimize(search_assignment(rays, options));
        }
    }
}
BENCHMARK(BM_KsPeres)->Apply(threads_args);

} // namespace

BENCHMARK_MAIN();
