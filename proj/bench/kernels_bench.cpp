// Plain vs. vector kernels under Google Benchmark, one pair per scenario.
// Complements `simdbench run`, which follows the interleaved protocol and
// writes reports; this target is for quick local comparisons.

#include <benchmark/benchmark.h>

#include <string>

#include "simdbench/datagen.hpp"
#include "simdbench/defaults.hpp"
#include "simdbench/scenarios.hpp"

namespace {

using simdbench::Variant;

void run_kernel(benchmark::State& state, int id, Variant variant) {
    const auto& spec = simdbench::scenario(id);
    auto data = simdbench::generate(static_cast<std::size_t>(state.range(0)), simdbench::kDefaultSeed);
    for (auto _ : state) {
        if (variant == Variant::plain) {
            simdbench::run_plain(spec, data);
            benchmark::DoNotOptimize(data.d_plain.data());
        } else {
            simdbench::run_vector(spec, data);
            benchmark::DoNotOptimize(data.d_vector.data());
        }
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

const bool registered = [] {
    for (const auto& spec : simdbench::catalogue()) {
        for (const auto variant : {Variant::plain, Variant::vector}) {
            const auto name = "scenario" + std::to_string(spec.id) + "/" + std::string(simdbench::to_string(variant));
            benchmark::RegisterBenchmark(name.c_str(), run_kernel, spec.id, variant)
                ->RangeMultiplier(16)
                ->Range(1 << 12, 1 << 24)
                ->Unit(benchmark::kMicrosecond);
        }
    }
    return true;
}();

}  // namespace

BENCHMARK_MAIN();
