#include <benchmark/benchmark.h>

#include "seqcorr/expsums.hpp"
#include "seqcorr/field.hpp"
#include "seqcorr/sequences.hpp"
#include "seqcorr/verifier.hpp"

using namespace seqcorr;

namespace {

void BM_FieldMul(benchmark::State& state) {
    const Field f(static_cast<int>(state.range(0)));
    Elem x = f.generator();
    for (auto _ : state) {
        x = f.mul(x, 3);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_FieldMul)->Arg(6)->Arg(14)->Arg(20);

void BM_FieldPow(benchmark::State& state) {
    const Field f(14);
    Elem x = 5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.pow(x, 233017));
        x = (x % (f.q() - 1)) + 1;
    }
}
BENCHMARK(BM_FieldPow);

void BM_Distribution(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int threads = static_cast<int>(state.range(1));
    const Field f(2 * k);
    const SeqParams p = make_seq_params(f, k, 1);
    for (auto _ : state) benchmark::DoNotOptimize(distribution(f, p, threads));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.order()) *
                            f.order());
}
BENCHMARK(BM_Distribution)
    ->Args({3, 1})
    ->Args({5, 1})
    ->Args({7, 1})
    ->Args({7, 2})
    ->Args({7, 8})
    ->Unit(benchmark::kMillisecond);

void BM_SSum(benchmark::State& state) {
    const Field f(10);
    const SeqParams p = make_seq_params(f, 5, 1);
    Elem a = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(s_sum(f, p, a));
        a = (a % (f.q() - 1)) + 1;
    }
}
BENCHMARK(BM_SSum);

void BM_TSum(benchmark::State& state) {
    const Field f(10);
    const SeqParams p = make_seq_params(f, 5, 1);
    Elem a = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(t_sum(f, p, a, p.delta));
        a = (a % (f.q() - 1)) + 1;
    }
}
BENCHMARK(BM_TSum);

void BM_Radical(benchmark::State& state) {
    const Field f(14);
    const SeqParams p = make_seq_params(f, 7, 3);
    Elem a = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(radical(f, p, a, p.delta));
        a = (a % (f.q() - 1)) + 1;
    }
}
BENCHMARK(BM_Radical);

void BM_VerifyFull(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Field f(2 * k);
    const SeqParams p = make_seq_params(f, k, 1);
    const VerifyOptions opt{VerifyMode::full, static_cast<int>(state.range(1)), 0};
    for (auto _ : state) benchmark::DoNotOptimize(verify(f, p, opt));
}
BENCHMARK(BM_VerifyFull)->Args({3, 1})->Args({5, 2})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
