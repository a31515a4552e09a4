#include <benchmark/benchmark.h>

#include "pzeta/constructions.hpp"
#include "pzeta/lattice.hpp"
#include "pzeta/multipoly.hpp"
#include "pzeta/zeta.hpp"

using namespace pzeta;

static void BM_SchreierSims_PSL(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psl2(p).order());
}
BENCHMARK(BM_SchreierSims_PSL)->Arg(11)->Arg(31)->Arg(101);

static void BM_SchreierSims_Wreath(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wreath_with_top(alternating(5), cyclic(3)).order());
}
BENCHMARK(BM_SchreierSims_Wreath);

static void BM_FullLattice(benchmark::State& state) {
  const GroupTable g(psl2(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(g).classes.size());
}
BENCHMARK(BM_FullLattice)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_PG_PSL211(benchmark::State& state) {
  const GroupTable g(psl2(11));
  for (auto _ : state) benchmark::DoNotOptimize(p_g(g));
}
BENCHMARK(BM_PG_PSL211)->Unit(benchmark::kMillisecond);

static void BM_PG_A5xA5(benchmark::State& state) {
  const GroupTable g(direct_product(alternating(5), alternating(5)));
  for (auto _ : state) benchmark::DoNotOptimize(p_g(g));
}
BENCHMARK(BM_PG_A5xA5)->Unit(benchmark::kMillisecond);

static void BM_MultiPolyGcd(benchmark::State& state) {
  const MultiPoly x2 = MultiPoly::term(1, Monomial::variable(2, 1));
  const MultiPoly x3 = MultiPoly::term(1, Monomial::variable(3, 1));
  const MultiPoly x5 = MultiPoly::term(1, Monomial::variable(5, 1));
  const MultiPoly common = 1 - 12 * x2 * x2 * x3 + x5;
  const MultiPoly a = common * (1 + 3 * x2 * x5 - x3 * x3);
  const MultiPoly b = common * (2 - x5 * x5 * x3 + 7 * x2);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_MultiPolyGcd);

BENCHMARK_MAIN();
