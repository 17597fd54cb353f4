#include <benchmark/benchmark.h>

#include "gf2du/diffuni.hpp"
#include "gf2du/harness.hpp"
#include "gf2du/morse.hpp"

namespace {

void BM_ddt_row(benchmark::State& state) {
    auto field = gf2du::Field::create(static_cast<unsigned>(state.range(0)));
    gf2du::TrinomialSpec f{8, field.one(), field.one(), field.one()};
    gf2du::Poly p = f.to_poly();
    for (auto _ : state) {
        auto row = gf2du::ddt_row(p, field.x());
        benchmark::DoNotOptimize(row);
    }
}
BENCHMARK(BM_ddt_row)->Arg(10)->Arg(12);

void BM_delta_m8(benchmark::State& state) {
    auto field = gf2du::Field::create(static_cast<unsigned>(state.range(0)));
    gf2du::TrinomialSpec f{8, field.one(), field.one(), field.one()};
    gf2du::Poly p = f.to_poly();
    for (auto _ : state) {
        auto rep = gf2du::delta(p);
        benchmark::DoNotOptimize(rep.delta);
    }
}
BENCHMARK(BM_delta_m8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_census_alpha(benchmark::State& state) {
    // cost of one alpha step of the critical-value census at m = 12
    auto field = gf2du::Field::create(12);
    gf2du::TrinomialSpec f{12, field.one(), field.one(), field.zero()};
    gf2du::Poly p = f.to_poly();
    std::uint64_t a = 1;
    for (auto _ : state) {
        gf2du::Poly g = gf2du::lalpha(p, field.elem(a));
        auto rep = gf2du::has_distinct_critical_values(g);
        benchmark::DoNotOptimize(rep.distinct_values);
        a = (a & field.elem_mask()) + 1;
        if (a > field.group_order()) a = 1;
    }
}
BENCHMARK(BM_census_alpha);

void BM_condition1_scan(benchmark::State& state) {
    std::uint64_t m = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto v = gf2du::satisfies_condition1(m);
        benchmark::DoNotOptimize(v.member);
    }
}
BENCHMARK(BM_condition1_scan)->Arg(168)->Arg(198)->Unit(benchmark::kMillisecond);

}  // namespace
