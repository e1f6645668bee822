#include <benchmark/benchmark.h>

#include "torix/cohomology.hpp"
#include "torix/corpus.hpp"
#include "torix/divisors.hpp"
#include "torix/positivity.hpp"

using namespace torix;

namespace {

Fan tower(std::size_t dim, std::size_t steps) { return generate_corpus(7, 1, dim, steps).front().fan; }

WeilDivisor ramp(const Fan& fan, Int lo) {
    WeilDivisor d = zero_divisor(fan);
    for (std::size_t i = 0; i < d.coeffs.size(); ++i)
        d.coeffs[i] = lo + static_cast<Int>(i % 3);
    return d;
}

void BM_CohomologyGeneral(benchmark::State& state) {
    Fan fan = tower(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    WeilDivisor d = ramp(fan, -2);
    for (auto _ : state)
        benchmark::DoNotOptimize(cohomology_table(fan, d));
    state.counters["max_cones"] = static_cast<double>(fan.max_cones().size());
}
BENCHMARK(BM_CohomologyGeneral)->Args({2, 0})->Args({2, 3})->Args({3, 0})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_CohomologySimplicial(benchmark::State& state) {
    Fan fan = tower(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    WeilDivisor d = ramp(fan, -2);
    for (auto _ : state)
        benchmark::DoNotOptimize(cohomology_table(fan, d, {Engine::Simplicial}));
    state.counters["max_cones"] = static_cast<double>(fan.max_cones().size());
}
BENCHMARK(BM_CohomologySimplicial)->Args({2, 0})->Args({2, 3})->Args({3, 0})->Args({3, 2})->Args({3, 5})->Unit(benchmark::kMillisecond);

void BM_LocalCohomology(benchmark::State& state) {
    Fan fan = tower(3, static_cast<std::size_t>(state.range(0)));
    IntVector alpha(fan.ray_count(), -1);
    for (std::size_t i = 0; i < alpha.size(); i += 2)
        alpha[i] = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(local_cohomology_S_dims(fan, alpha));
}
BENCHMARK(BM_LocalCohomology)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_PositivityProfile(benchmark::State& state) {
    Fan fan = tower(3, static_cast<std::size_t>(state.range(0)));
    WeilDivisor d = ramp(fan, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(positivity_profile(fan, d));
}
BENCHMARK(BM_PositivityProfile)->Arg(0)->Arg(3)->Arg(6);

void BM_ClassGroup(benchmark::State& state) {
    Fan fan = tower(3, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(class_group(fan).free_rank());
}
BENCHMARK(BM_ClassGroup)->Arg(0)->Arg(6);

} // namespace
BENCHMARK_MAIN();
