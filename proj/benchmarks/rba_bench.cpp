#include <benchmark/benchmark.h>

#include "rba/battery.hpp"
#include "rba/duality.hpp"
#include "rba/suites.hpp"

namespace {

const rba::Fixtures& fx() {
    static rba::Fixtures f = rba::load_fixtures(RBA_FIXTURE_DIR);
    return f;
}

void BM_CheckRba12(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(rba::check_rba(fx().example1));
}
BENCHMARK(BM_CheckRba12);

void BM_CheckRbaConcrete(benchmark::State& state) {
    std::vector<std::string> pts;
    for (int i = 0; i < state.range(0); ++i) pts.push_back(std::string(1, char('a' + i)));
    rba::AlgebraTable a = rba::materialize(rba::make_universe(pts));
    for (auto _ : state) benchmark::DoNotOptimize(rba::check_rba(a));
    state.SetComplexityN(a.size());
}
BENCHMARK(BM_CheckRbaConcrete)->DenseRange(2, 5)->Complexity();

void BM_Materialize(benchmark::State& state) {
    std::vector<std::string> pts;
    for (int i = 0; i < state.range(0); ++i) pts.push_back(std::string(1, char('a' + i)));
    rba::Universe u = rba::make_universe(pts);
    for (auto _ : state) benchmark::DoNotOptimize(rba::materialize(u));
}
BENCHMARK(BM_Materialize)->DenseRange(2, 5);

void BM_StoneEmbed(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(rba::stone_embed(fx().example1));
}
BENCHMARK(BM_StoneEmbed);

void BM_FilterExtension(benchmark::State& state) {
    const rba::AlgebraTable& a = fx().example1;
    rba::Filter base = rba::make_filter({a.top()});
    rba::ElementId avoid = *a.find("Y_B");
    for (auto _ : state) benchmark::DoNotOptimize(rba::extend_filter(a, base, avoid));
}
BENCHMARK(BM_FilterExtension);

void BM_BatteryEval(benchmark::State& state) {
    rba::FormulaArena arena =
        rba::FormulaArena::build({"p", "q"}, state.range(0), /*include_modal=*/true, 2);
    const rba::Mrba& m = fx().example2;
    std::vector<rba::ElementId> values = {*m.algebra.find("X_B"), *m.algebra.find("X_R")};
    std::vector<rba::ElementId> out;
    for (auto _ : state) {
        rba::eval_all(arena, m.algebra, &m.fk, values, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * arena.size());
}
BENCHMARK(BM_BatteryEval)->DenseRange(3, 6);

void BM_ModelExtensions(benchmark::State& state) {
    rba::FormulaArena arena =
        rba::FormulaArena::build({"p", "q"}, state.range(0), /*include_modal=*/true, 2);
    std::vector<rba::Extension> out;
    for (auto _ : state) {
        rba::ext_all(arena, fx().figure3, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * arena.size());
}
BENCHMARK(BM_ModelExtensions)->DenseRange(3, 6);

void BM_DualizeModel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(rba::model_to_mrba(fx().figure3));
}
BENCHMARK(BM_DualizeModel);

void BM_UltrafilterModel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            rba::mrba_to_model(fx().example2, fx().example2_assign));
}
BENCHMARK(BM_UltrafilterModel);

}  // namespace

BENCHMARK_MAIN();
