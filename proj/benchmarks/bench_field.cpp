#include <benchmark/benchmark.h>

#include "gf2du/field.hpp"
#include "gf2du/rng.hpp"

namespace {

void BM_field_mul_tabled(benchmark::State& state) {
    auto field = gf2du::Field::create(static_cast<unsigned>(state.range(0)));
    const auto* f = field.impl();
    gf2du::SplitMix64 rng(7);
    std::uint64_t a = rng.next_nonzero_bits(field.degree());
    std::uint64_t b = rng.next_nonzero_bits(field.degree());
    for (auto _ : state) {
        a = f->mul(a, b);
        benchmark::DoNotOptimize(a);
        if (a == 0) a = 1;
    }
}
BENCHMARK(BM_field_mul_tabled)->Arg(8)->Arg(12)->Arg(16);

void BM_field_mul_generic(benchmark::State& state) {
    auto field = gf2du::Field::create(static_cast<unsigned>(state.range(0)));
    const auto* f = field.impl();
    gf2du::SplitMix64 rng(7);
    std::uint64_t a = rng.next_nonzero_bits(field.degree());
    std::uint64_t b = rng.next_nonzero_bits(field.degree());
    for (auto _ : state) {
        a = f->mul_generic(a, b);
        benchmark::DoNotOptimize(a);
        if (a == 0) a = 1;
    }
}
BENCHMARK(BM_field_mul_generic)->Arg(12)->Arg(24)->Arg(48);

void BM_field_inv(benchmark::State& state) {
    auto field = gf2du::Field::create(static_cast<unsigned>(state.range(0)));
    const auto* f = field.impl();
    std::uint64_t a = 3;
    for (auto _ : state) {
        a = f->inv(a);
        benchmark::DoNotOptimize(a);
        a = (a == 0) ? 1 : a;
    }
}
BENCHMARK(BM_field_inv)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
