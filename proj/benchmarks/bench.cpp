#include <benchmark/benchmark.h>

#include "liecp/fixtures.hpp"
#include "liecp/normality.hpp"

using namespace liecp;

namespace {

const Fixture& solvable6() {
  static const Fixture f = load_fixture("solvable6");
  return f;
}

ContactPairStructure solvable6_structure() {
  const Fixture& f = solvable6();
  return make_cps(make_contact_pair(f.algebra, f.one_forms.at("alpha1"), f.one_forms.at("alpha2")),
                  f.endos.at("phi"));
}

void BM_jacobi_check(benchmark::State& state) {
  const LieAlgebra& L = solvable6().algebra;
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_check(L).passed());
}
BENCHMARK(BM_jacobi_check);

void BM_exterior_derivative(benchmark::State& state) {
  const LieAlgebra& L = solvable6().algebra;
  const AltForm vol = wedge(AltForm::wedge_pair(6, 0, 3), AltForm::wedge_pair(6, 1, 4));
  for (auto _ : state) benchmark::DoNotOptimize(exterior_derivative(L, vol).is_zero());
}
BENCHMARK(BM_exterior_derivative);

void BM_wedge_volume(benchmark::State& state) {
  const Fixture& f = solvable6();
  const AltForm& a1 = f.one_forms.at("alpha1");
  const AltForm& a2 = f.one_forms.at("alpha2");
  const AltForm da1 = exterior_derivative(f.algebra, a1);
  const AltForm da2 = exterior_derivative(f.algebra, a2);
  for (auto _ : state)
    benchmark::DoNotOptimize(wedge(wedge(a1, da1), wedge(a2, da2)).is_zero());
}
BENCHMARK(BM_wedge_volume);

void BM_reeb_solve(benchmark::State& state) {
  const Fixture& f = solvable6();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        reeb_pair(f.algebra, f.one_forms.at("alpha1"), f.one_forms.at("alpha2")));
}
BENCHMARK(BM_reeb_solve);

void BM_classify_contact_pair(benchmark::State& state) {
  const Fixture& f = solvable6();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        classify_contact_pair(f.algebra, f.one_forms.at("alpha1"), f.one_forms.at("alpha2")).ok);
}
BENCHMARK(BM_classify_contact_pair);

void BM_nijenhuis(benchmark::State& state) {
  const Fixture& f = solvable6();
  for (auto _ : state)
    benchmark::DoNotOptimize(nijenhuis(f.algebra, f.endos.at("phi")).is_zero());
}
BENCHMARK(BM_nijenhuis);

void BM_darboux_construction(benchmark::State& state) {
  const ContactPairStructure S = solvable6_structure();
  const SplittingBases B = splitting_bases(S.pair);
  for (auto _ : state)
    benchmark::DoNotOptimize(construct_decomposable_phi(S.pair, B).is_zero());
}
BENCHMARK(BM_darboux_construction);

void BM_full_normality_report(benchmark::State& state) {
  const ContactPairStructure S = solvable6_structure();
  for (auto _ : state) benchmark::DoNotOptimize(normality_report(S).pair_normal);
}
BENCHMARK(BM_full_normality_report);

}  // namespace

BENCHMARK_MAIN();
