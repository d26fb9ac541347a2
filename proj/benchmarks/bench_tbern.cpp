#include "tbern/padic.hpp"
#include "tbern/symmetry.hpp"

#include <benchmark/benchmark.h>

using namespace tbern;

namespace {

TwistContext bench_context(long d, std::size_t index, std::uint32_t xi_order)
{
    return TwistContext(enumerate_characters(d).at(index), xi_order, 1);
}

} // namespace

static void BM_CycloMultiply(benchmark::State& state)
{
    const FieldPtr f = CycloField::of(static_cast<std::uint32_t>(state.range(0)));
    CycloNumber a = CycloNumber::root(f, 1) + CycloNumber(f, make_rational(3, 7));
    const CycloNumber b = CycloNumber::root(f, 2) - CycloNumber(f, make_rational(1, 5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_CycloMultiply)->Arg(4)->Arg(12)->Arg(60);

static void BM_CycloInverse(benchmark::State& state)
{
    const FieldPtr f = CycloField::of(static_cast<std::uint32_t>(state.range(0)));
    const CycloNumber a = CycloNumber::root(f, 1) + CycloNumber(f, make_rational(3, 7));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.inverse());
    }
}
BENCHMARK(BM_CycloInverse)->Arg(4)->Arg(12)->Arg(60);

static void BM_BernoulliNumbers(benchmark::State& state)
{
    const auto ctx = bench_context(5, 1, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bernoulli_numbers(ctx, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_BernoulliNumbers)->Arg(6)->Arg(12)->Arg(24);

static void BM_QuotientSeries(benchmark::State& state)
{
    const auto ctx = bench_context(4, 1, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(quotient_series(QuotientSpec{Family::L23, 1, {2, 3, 5}, ctx}, 6));
    }
}
BENCHMARK(BM_QuotientSeries);

static void BM_VerifyTheorem(benchmark::State& state)
{
    const auto ctx = bench_context(5, 1, 4);
    for (auto _ : state) {
        Evaluator evaluator(ctx, {2, 3, 5});
        benchmark::DoNotOptimize(verify_theorem(static_cast<int>(state.range(0)), evaluator, 6));
    }
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(1, 8);

static void BM_Convergence(benchmark::State& state)
{
    const auto ctx = TwistContext::ramified(enumerate_characters(3).at(1), 3, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convergence_check(ctx, 4, 5));
    }
}
BENCHMARK(BM_Convergence);

BENCHMARK_MAIN();
