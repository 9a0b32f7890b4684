// Copyright 2026 The cliffnf Authors
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

#include <random>

#include "cliffnf/circuit.h"
#include "cliffnf/gate_library.h"
#include "cliffnf/normal_form.h"
#include "cliffnf/oracle.h"
#include "cliffnf/rewrite.h"

namespace cliffnf {
namespace {

Circuit random_circuit(std::size_t n, std::size_t len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Circuit c(n);
    while (c.gates.size() < len) {
        auto q = static_cast<std::uint32_t>(rng() % n);
        switch (rng() % 3) {
            case 0:
                c += Gate::h(q);
                break;
            case 1:
                c += Gate::s(q);
                break;
            default:
                if (n > 1) {
                    auto a = static_cast<std::uint32_t>(rng() % (n - 1));
                    c += Gate::cz(a, a + 1);
                }
        }
    }
    return c;
}

void BM_Tableau(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Circuit c = random_circuit(n, 20 * n * n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(circuit_tableau(c));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.gates.size()));
}
BENCHMARK(BM_Tableau)->RangeMultiplier(4)->Range(2, 128);

// Phase-free synthesis scales to registers far beyond the dense oracle.
void BM_SynthesizePhaseFree(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto t = circuit_tableau(random_circuit(n, 20 * n * n, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(synthesize(t));
    }
}
BENCHMARK(BM_SynthesizePhaseFree)->RangeMultiplier(2)->Range(2, 64);

void BM_SynthesizeExact(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Circuit c = random_circuit(n, 100, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(synthesize_circuit(c));
    }
}
BENCHMARK(BM_SynthesizeExact)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

void BM_OracleUnitary(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Circuit c = random_circuit(n, 100, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(circuit_unitary(c));
    }
}
BENCHMARK(BM_OracleUnitary)->DenseRange(1, 7)->Unit(benchmark::kMillisecond);

void BM_RewriteNormalize(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Circuit c = random_circuit(n, static_cast<std::size_t>(state.range(1)), 5);
    const RuleSet &rules = standard_rules();
    RewriteOptions opts;
    opts.check_measure = false;
    std::size_t steps = 0;
    for (auto _ : state) {
        RewriteStats stats;
        benchmark::DoNotOptimize(rewrite_normalize(c, rules, opts, &stats));
        steps = stats.steps;
    }
    state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_RewriteNormalize)->ArgsProduct({{1, 2, 3}, {20, 60}})->Unit(benchmark::kMillisecond);

void BM_GenerateRules(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_rules());
    }
}
BENCHMARK(BM_GenerateRules)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_EnumerateTwoQubits(benchmark::State &state) {
    for (auto _ : state) {
        std::uint64_t seen = enumerate_normal_forms(2, [](const NormalForm &nf) {
            benchmark::DoNotOptimize(circuit_tableau(nf_to_circuit(nf)));
            return true;
        });
        benchmark::DoNotOptimize(seen);
    }
}
BENCHMARK(BM_EnumerateTwoQubits)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
}  // namespace cliffnf

BENCHMARK_MAIN();
