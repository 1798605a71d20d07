// Microbenchmarks for the hot paths: atom table construction, the
// factorization search, memoized length sets, catenary degrees, full scans,
// and the structure fits.

#include <benchmark/benchmark.h>

#include "factorlab/aap.hpp"
#include "factorlab/block_monoid.hpp"
#include "factorlab/engine.hpp"
#include "factorlab/power_monoid.hpp"

namespace {

using namespace factorlab;

void BM_BlockAtoms_C3xC3(benchmark::State& state) {
  AbelianGroup g(std::vector<int>{3, 3});
  for (auto _ : state) {
    BlockMonoid b = BlockMonoid::over_group(g);
    benchmark::DoNotOptimize(b.atom_count());
  }
}
BENCHMARK(BM_BlockAtoms_C3xC3);

void BM_Factorizations_C4_witness(benchmark::State& state) {
  AbelianGroup g(std::vector<int>{4});
  BlockMonoid b = BlockMonoid::over_group(g);
  // g^4 (3g)^4, the maximal-elasticity element of the length-9 scan
  Element a{0, 4, 0, 4};
  for (auto _ : state) {
    Engine e(b);
    benchmark::DoNotOptimize(e.factorizations(a).size());
  }
}
BENCHMARK(BM_Factorizations_C4_witness);

void BM_Lengths_scope9_C4(benchmark::State& state) {
  AbelianGroup g(std::vector<int>{4});
  BlockMonoid b = BlockMonoid::over_group(g);
  std::vector<Element> scope = b.scope_elements(9);
  for (auto _ : state) {
    Engine e(b);
    std::size_t total = 0;
    for (const Element& a : scope) total += e.lengths(a).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_Lengths_scope9_C4);

void BM_Catenary_C3xC3_witness(benchmark::State& state) {
  AbelianGroup g(std::vector<int>{3, 3});
  BlockMonoid b = BlockMonoid::over_group(g);
  // (1,0)(1,1)^2(1,2)^2(2,0)(2,1)^2(2,2)^2, elasticity 5/2 at scan bound 10
  Element a{0, 0, 0, 1, 2, 2, 1, 2, 2};
  for (auto _ : state) {
    Engine e(b);
    benchmark::DoNotOptimize(e.catenary_degree(a));
  }
}
BENCHMARK(BM_Catenary_C3xC3_witness);

void BM_Scan_C2x2x2_b9(benchmark::State& state) {
  AbelianGroup g(std::vector<int>{2, 2, 2});
  BlockMonoid b = BlockMonoid::over_group(g);
  std::vector<Element> scope = b.scope_elements(9);
  for (auto _ : state) {
    ScanAggregate agg = scan_elements(b, scope, 1);
    benchmark::DoNotOptimize(agg.max_catenary);
  }
}
BENCHMARK(BM_Scan_C2x2x2_b9);

void BM_PowerMonoid_build_N10(benchmark::State& state) {
  for (auto _ : state) {
    PowerMonoid0 p(10);
    benchmark::DoNotOptimize(p.atom_count());
  }
}
BENCHMARK(BM_PowerMonoid_build_N10);

void BM_FitAampMin(benchmark::State& state) {
  std::set<std::int64_t> L;
  for (int i = 0; i < 30; ++i) L.insert(10 + 3 * i);
  L.insert(9);
  L.insert(101);
  for (auto _ : state) {
    PeriodFit f = fit_aamp_min(L, 3);
    benchmark::DoNotOptimize(f.bound);
  }
}
BENCHMARK(BM_FitAampMin);

}  // namespace

BENCHMARK_MAIN();
