#include <benchmark/benchmark.h>

#include "grmirror/gelfand_cetlin.hpp"
#include "grmirror/mirror.hpp"
#include "grmirror/quantum.hpp"
#include "grmirror/schur.hpp"

using namespace grmirror;

namespace {

void BM_CycIntMul(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  CycInt a(order);
  CycInt b(order);
  for (int e = 0; e < order; ++e) {
    a.add_term(e, (e * 7) % 11 - 5);
    b.add_term(e, (e * 5) % 9 - 4);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_CycIntMul)->Arg(20)->Arg(40);

void BM_SchurSSYT(benchmark::State& state) {
  const GridShape g{3, 7};
  const YoungDiagram d(g, {4, 2, 1});
  const RootSet J = enumerate_rootsets(7, 3, +1).front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(schur_ssyt(d, J));
  }
}
BENCHMARK(BM_SchurSSYT);

void BM_SchurJacobiTrudi(benchmark::State& state) {
  const GridShape g{3, 7};
  const YoungDiagram d(g, {4, 2, 1});
  const RootSet J = enumerate_rootsets(7, 3, +1).front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(schur_jacobi_trudi(d, J));
  }
}
BENCHMARK(BM_SchurJacobiTrudi);

void BM_SchurBatchBasis(benchmark::State& state) {
  const GridShape g{3, 7};
  const SchurEvaluator eval(g);
  const RootSet J = enumerate_rootsets(7, 3, +1).front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval.values(J));
  }
}
BENCHMARK(BM_SchurBatchBasis);

void BM_EigenvectorBasisCheck(benchmark::State& state) {
  const GridShape g{3, 7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_all_schur_eigenvectors(g, 1));
  }
}
BENCHMARK(BM_EigenvectorBasisCheck);

void BM_Pullback(benchmark::State& state) {
  const GridShape g{4, 9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_pullback(g));
  }
}
BENCHMARK(BM_Pullback);

void BM_ChartReports(benchmark::State& state) {
  const GridShape g{2, 6};
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_chart_reports(g, 1));
  }
}
BENCHMARK(BM_ChartReports);

}  // namespace

BENCHMARK_MAIN();
