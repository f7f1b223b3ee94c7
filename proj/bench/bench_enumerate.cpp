// Serial against OpenMP enumeration on profiles with enough atoms to branch.

#include "qmdt/mdt.hpp"

#include <benchmark/benchmark.h>

using namespace qmdt;

namespace {

const Profile& profileFor(int index) {
    static const std::vector<Profile> profiles{
        mkProfile(10, 3, 4, {0, 1, 3}),
        mkProfile(14, 6, 2, {0, 1, 2, 3, 4, 5, 6}),
        mkProfile(16, 7, 2, {0, 1, 2, 3, 4, 5, 6, 7}),
        mkProfile(18, 8, 2, {0, 1, 2, 3, 4, 5, 6, 7, 8}),
    };
    return profiles.at(index);
}

void serial(benchmark::State& state) {
    const Profile& p = profileFor(static_cast<int>(state.range(0)));
    const RuleSet rules = RuleSet::proven(p);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerateMDTSerial(p, rules));
    state.SetLabel("r=" + std::to_string(p.r));
}

void parallel(benchmark::State& state) {
    const Profile& p = profileFor(static_cast<int>(state.range(0)));
    const RuleSet rules = RuleSet::proven(p);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerateMDT(p, rules));
    state.SetLabel("r=" + std::to_string(p.r));
}

} // namespace

BENCHMARK(serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
