// Serial against parallel execution of the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "skewrec/recurrence.hpp"
#include "skewrec/schur.hpp"
#include "skewrec/tableau.hpp"

using namespace skewrec;

namespace {

Execution mode(const benchmark::State& state)
{
    return state.range(0) ? Execution::parallel : Execution::serial;
}

void label(benchmark::State& state)
{
    state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_enumerate(benchmark::State& state)
{
    const SkewShape shape({6, 5, 3, 2}, {2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate(shape, 4, mode(state)));
    label(state);
}

void BM_skew_schur(benchmark::State& state)
{
    const SkewShape shape({24, 18, 10}, {8, 4});
    for (auto _ : state)
        benchmark::DoNotOptimize(skew_schur(shape, 4, mode(state)));
    label(state);
}

void BM_prefetch(benchmark::State& state)
{
    for (auto _ : state) {
        SchurSequence seq = build_sequence({2, 1}, {1}, {3, 1}, {1}, 3);
        seq.prefetch(0, 12, mode(state));
        benchmark::DoNotOptimize(seq.term(12));
    }
    label(state);
}

void BM_verify(benchmark::State& state)
{
    SchurSequence seq = build_sequence({2, 1}, {1}, {3, 1}, {1}, 3);
    CharPoly chi = char_poly({3, 1}, {1}, 3);
    seq.prefetch(0, chi.degree() + 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_recurrence(seq, chi, 0, 8, mode(state)));
    label(state);
}

}  // namespace

BENCHMARK(BM_enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_skew_schur)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_prefetch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
