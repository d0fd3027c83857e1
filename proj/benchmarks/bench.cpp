#include <benchmark/benchmark.h>

#include "psicalc/filtration.hpp"
#include "psicalc/identities.hpp"
#include "psicalc/kgroup.hpp"
#include "psicalc/sheaf_table.hpp"
#include "psicalc/stalks.hpp"
#include "psicalc/vanishing.hpp"

using namespace psicalc;

static void BM_PsiClass(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    KClass psi = psi_class(r);
    benchmark::DoNotOptimize(psi);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PsiClass)->DenseRange(6, 12, 2)->Complexity();

static void BM_SheafTable(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const KClass psi = psi_class(r);
  for (auto _ : state) {
    SheafTable t = to_sheaf_table(psi, r);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_SheafTable)->DenseRange(6, 10, 2);

static void BM_BasisConversion(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const KClass psi = psi_class(r);
  for (auto _ : state) {
    ShKClass sh = to_shriek_basis(psi);
    benchmark::DoNotOptimize(sh);
  }
}
BENCHMARK(BM_BasisConversion)->DenseRange(4, 8, 2);

static void BM_RankRational(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ChainComplex c = koszul_complex(m, 1);
  // The widest differential sits near the middle of the complex.
  const IntMatrix& d = c.diffs[m / 2 - 1];
  for (auto _ : state) benchmark::DoNotOptimize(rank(d, 0));
}
BENCHMARK(BM_RankRational)->DenseRange(6, 10, 2);

static void BM_RankMod5(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ChainComplex c = koszul_complex(m, 1);
  const IntMatrix& d = c.diffs[m / 2 - 1];
  for (auto _ : state) benchmark::DoNotOptimize(rank(d, 5));
}
BENCHMARK(BM_RankMod5)->DenseRange(6, 10, 2);

static void BM_Abutment(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const Stratum I = Stratum::full(r);
  for (auto _ : state) {
    StalkTable t = e2_abutment(r, I, r, 0);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_Abutment)->DenseRange(4, 8, 2);

static void BM_Admissibility(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const Filtration f = psi_filtration(r);
  const auto cs = constraints(r);
  for (auto _ : state) {
    AdmissibilityReport rep = check_admissible(f, cs);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_Admissibility)->DenseRange(4, 8, 2);

static void BM_IdentityCatalog(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto reps = verify_all_identities(r);
    benchmark::DoNotOptimize(reps);
  }
}
BENCHMARK(BM_IdentityCatalog)->DenseRange(3, 5, 1);

static void BM_VanishingInduction(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const CharacterDatum chi = CharacterDatum::with_support(Stratum::full(r));
  for (auto _ : state) {
    IntervalMap out = run_vanishing_induction(r, chi);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_VanishingInduction)->DenseRange(4, 8, 2);

BENCHMARK_MAIN();
