#include <benchmark/benchmark.h>

#include "chromsym/classify.hpp"
#include "chromsym/graph.hpp"
#include "chromsym/symfunc.hpp"
#include "chromsym/tableaux.hpp"

using namespace chromsym;

namespace {

void BM_LrExpand(benchmark::State& state) {
    const SkewDiagram d(Partition({6, 4, 4, 1}), Partition({3, 2}));
    for (auto _ : state) benchmark::DoNotOptimize(lr_expand(d));
}
BENCHMARK(BM_LrExpand);

void BM_ChromaticEdges(benchmark::State& state) {
    const Graph g = Graph::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_sym_edges(g));
}
BENCHMARK(BM_ChromaticEdges)->Arg(4)->Arg(5)->Arg(6);

void BM_ChromaticStable(benchmark::State& state) {
    const Graph g = Graph::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_sym_stable(g));
}
BENCHMARK(BM_ChromaticStable)->Arg(6)->Arg(8);

void BM_ToMonomialBasis(benchmark::State& state) {
    const SymFunc f = from_basis(BasisName::h, Partition({4, 2, 1, 1}));
    for (auto _ : state) benchmark::DoNotOptimize(to_basis(f, BasisName::m));
}
BENCHMARK(BM_ToMonomialBasis);

void BM_SchurCoefficients(benchmark::State& state) {
    const SymFunc f = chromatic_sym_edges(Graph::complete(6));
    for (auto _ : state) benchmark::DoNotOptimize(to_basis(f, BasisName::s));
}
BENCHMARK(BM_SchurCoefficients);

void BM_VerifyPpositive(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_ppositive(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyPpositive)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
