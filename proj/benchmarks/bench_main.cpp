#include <benchmark/benchmark.h>

#include "legaug/corpus.hpp"
#include "legaug/correspond.hpp"

using namespace legaug;

static void BM_resolve_trefoil(benchmark::State& state) {
    FrontDiagram d = corpus_front("right-trefoil");
    for (auto _ : state) {
        ResolvedDiagram R = resolve(d, BasePointMode::SingleTop);
        benchmark::DoNotOptimize(R.disks().size());
    }
}
BENCHMARK(BM_resolve_trefoil);

static void BM_dipped_disk_count(benchmark::State& state) {
    FrontDiagram d = corpus_front("right-trefoil");
    for (auto _ : state) {
        ResolvedDiagram D = build_dipped(resolve(d, BasePointMode::PerCusp));
        benchmark::DoNotOptimize(D.disks().size());
    }
}
BENCHMARK(BM_dipped_disk_count);

static void BM_d_squared_dipped(benchmark::State& state) {
    CeDga dga = dga_of_diagram(build_dipped(resolve(corpus_front("right-trefoil"), BasePointMode::PerCusp)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dga.d_squared_witness().has_value());
    }
}
BENCHMARK(BM_d_squared_dipped);

static void BM_augmentation_search(benchmark::State& state) {
    CeDga dga = dga_of_diagram(resolve(corpus_front("right-trefoil"), BasePointMode::SingleTop));
    for (auto _ : state) {
        auto augs = enumerate_augmentations(dga, FieldSpec::prime((int)state.range(0)), 0);
        benchmark::DoNotOptimize(augs.size());
    }
}
BENCHMARK(BM_augmentation_search)->Arg(3)->Arg(5)->Arg(7);

static void BM_ruling_enumeration(benchmark::State& state) {
    FrontDiagram d = corpus_front("left-trefoil-plat");
    for (auto _ : state) {
        auto rs = enumerate_rulings(d, 1);
        benchmark::DoNotOptimize(rs.size());
    }
}
BENCHMARK(BM_ruling_enumeration);

static void BM_aug_to_ruling(benchmark::State& state) {
    FrontDiagram d = corpus_front("right-trefoil");
    CeDga dga = dga_of_diagram(resolve(d, BasePointMode::SingleTop));
    auto augs = enumerate_augmentations(dga, FieldSpec::prime(2), 0);
    for (auto _ : state) {
        CorrespondResult res = augmentation_to_ruling(d, augs[0]);
        benchmark::DoNotOptimize(res.ruling.switches.size());
    }
}
BENCHMARK(BM_aug_to_ruling);

BENCHMARK_MAIN();
