#include <benchmark/benchmark.h>

#include "ppr/homology.hpp"
#include "ppr/random.hpp"
#include "ppr/reduction.hpp"

namespace {

std::vector<ppr::ChainComplexR> corpus(std::size_t degrees, std::size_t max_rank) {
  ppr::Rng rng(17);
  std::vector<ppr::ChainComplexR> out;
  for (int i = 0; i < 16; ++i) {
    ppr::ComplexShape shape;
    shape.degrees = degrees;
    shape.max_rank = max_rank;
    out.push_back(ppr::random_complex(rng, ppr::Prime(3), shape));
  }
  return out;
}

void BM_HomologyAllDegrees(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  const auto complexes = corpus(static_cast<std::size_t>(state.range(1)), 6);
  for (auto _ : state)
    for (const auto& c : complexes) benchmark::DoNotOptimize(ppr::homology_rdiagrams(c, parallel));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(complexes.size()));
}
BENCHMARK(BM_HomologyAllDegrees)->ArgNames({"parallel", "modules"})->ArgsProduct({{0, 1}, {3, 6}});

void BM_ClosedForm(benchmark::State& state) {
  const auto complexes = corpus(3, 6);
  for (auto _ : state)
    for (const auto& c : complexes) benchmark::DoNotOptimize(ppr::closed_form_components(c, 1));
}
BENCHMARK(BM_ClosedForm);

void BM_ReduceCombined(benchmark::State& state) {
  ppr::Rng rng(5);
  std::vector<ppr::SeparatedPresentation> pres;
  for (int i = 0; i < 32; ++i) pres.push_back(ppr::random_separated_presentation(rng, ppr::Prime(2)));
  const bool combined = state.range(0) != 0;
  for (auto _ : state)
    for (const auto& s : pres)
      benchmark::DoNotOptimize(combined ? ppr::reduce_combined(s) : ppr::reduce_sequential(s));
}
BENCHMARK(BM_ReduceCombined)->ArgName("combined")->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
