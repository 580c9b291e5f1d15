#include <benchmark/benchmark.h>

#include "donaldson/gluing.hpp"
#include "donaldson/pairing_fit.hpp"

using namespace donaldson;

namespace {

void BM_BuildBg(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_bg(g));
}
BENCHMARK(BM_BuildBg)->DenseRange(2, 6);

void BM_GlueBgBg(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const CatalogEntry b = build_bg(g);
  const GluingSpec spec = make_spec(b, b, g);
  for (auto _ : state) benchmark::DoNotOptimize(glue(spec));
}
BENCHMARK(BM_GlueBgBg)->DenseRange(2, 6);

void BM_EvalInsert(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const CatalogEntry b = build_bg(g);
  const auto& s = b.surface("Sigma");
  const HClass w = b.w_for(s);
  const HClass d = HClass::named(b.lattice(), "T1");
  for (auto _ : state) benchmark::DoNotOptimize(eval_insert(b.series, w, s.surface, d, 1, 2));
}
BENCHMARK(BM_EvalInsert)->DenseRange(2, 6);

void BM_RelationPoly(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const CatalogEntry b = build_bg(g);
  const auto& s = b.surface("Sigma");
  const HClass w = b.w_for(s);
  const HClass d = HClass::named(b.lattice(), "T1");
  const RelationPoly z = relation_poly(g);
  for (auto _ : state) benchmark::DoNotOptimize(apply_relation(b.series, w, s.surface, z, d));
}
BENCHMARK(BM_RelationPoly)->DenseRange(2, 6);

void BM_FitDiagonal(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const CatalogEntry b = build_bg(g);
  const CatalogEntry c = closed_form_cg(g);
  const GluingSpec spec = make_spec(b, b, g);
  const HClass t1 = HClass::named(b.lattice(), "T1");
  const SplitClass d{t1, t1, Rational(1)};
  const std::vector<ReferenceTriple> refs{
      target_reference(spec, d, c, "Sigma", HClass::named(c.lattice(), "Sigma2hat"))};
  for (auto _ : state) benchmark::DoNotOptimize(fit_diagonal(refs, {1, 2}));
}
BENCHMARK(BM_FitDiagonal)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
