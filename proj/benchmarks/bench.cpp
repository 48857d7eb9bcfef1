#include <benchmark/benchmark.h>

#include "graphsep/classifier.hpp"
#include "graphsep/dense.hpp"
#include "graphsep/pptmix.hpp"
#include "graphsep/transfer.hpp"

using namespace graphsep;

static void BM_TransferBuild(benchmark::State& state) {
  Graph g = path_graph(static_cast<int>(state.range(0)));
  Bipartition m = all_bipartitions(g.num_qubits()).front();
  for (auto _ : state) {
    TransferMatrix t(g, m);
    benchmark::DoNotOptimize(t.entry(0, 0));
  }
}
BENCHMARK(BM_TransferBuild)->Arg(4)->Arg(5)->Arg(6);

static void BM_TransferApply(benchmark::State& state) {
  Graph g = path_graph(static_cast<int>(state.range(0)));
  Bipartition m = all_bipartitions(g.num_qubits()).front();
  TransferMatrix t(g, m);
  GraphDiagonalState s = white_noise(g, rational(1, 3));
  for (auto _ : state) {
    RationalVec out = t.apply(s.weights);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_TransferApply)->Arg(4)->Arg(5)->Arg(6);

static void BM_ClassifyC4(benchmark::State& state) {
  GraphDiagonalState s = white_noise(path_graph(4), rational(5, 13));
  for (auto _ : state) {
    Verdict v = classify(s);
    benchmark::DoNotOptimize(v.kind);
  }
}
BENCHMARK(BM_ClassifyC4);

static void BM_PptMixtureC4(benchmark::State& state) {
  GraphDiagonalState s = white_noise(path_graph(4), rational(5, 13));
  std::vector<Bipartition> parts = all_bipartitions(4);
  for (auto _ : state) {
    LpCertificate c = is_ppt_mixture(s, parts);
    benchmark::DoNotOptimize(c.feasible);
  }
}
BENCHMARK(BM_PptMixtureC4);

static void BM_JacobiMinEig(benchmark::State& state) {
  GraphDiagonalState s = white_noise(path_graph(5), rational(1, 2));
  DenseOperator rho = state_to_dense(s);
  DenseOperator pt = partial_transpose(rho, all_bipartitions(5).front());
  for (auto _ : state) {
    double ev = min_eigenvalue(pt);
    benchmark::DoNotOptimize(ev);
  }
}
BENCHMARK(BM_JacobiMinEig);

BENCHMARK_MAIN();
