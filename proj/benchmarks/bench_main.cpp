#include <benchmark/benchmark.h>

#include "vhs/chern/chern.hpp"
#include "vhs/exact/matrix.hpp"
#include "vhs/exact/random.hpp"
#include "vhs/flag/derived_flag.hpp"
#include "vhs/hodge/graded_lie.hpp"
#include "vhs/integral/integral_element.hpp"
#include "vhs/jacobian/graded_ideal.hpp"
#include "vhs/jacobian/hypersurface.hpp"
#include "vhs/nl/noether_lefschetz.hpp"

using namespace vhs;

namespace {

void BM_ExactRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SeededStream rng(1);
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.next_int(-9, 9);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_ExactRank)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_GradedLie(benchmark::State& state) {
  const HodgeNumbers h(static_cast<int>(state.range(0)), std::vector<std::size_t>(state.range(0) + 1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(GradedLie(h).nilpotent_dim());
}
BENCHMARK(BM_GradedLie)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_DerivedFlag(benchmark::State& state) {
  const GradedLie lie(HodgeNumbers(static_cast<int>(state.range(0)), std::vector<std::size_t>(state.range(0) + 1, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(derived_flag(lie).stabilized_at);
}
BENCHMARK(BM_DerivedFlag)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_CartanTest(benchmark::State& state) {
  const GradedLie lie(HodgeNumbers(2, {3, 2, 3}));
  const auto e = normal_form_w2(lie, {1, 2}, {3, 5});
  for (auto _ : state) benchmark::DoNotOptimize(cartan_test(e, 8, 1).ordinary);
}
BENCHMARK(BM_CartanTest)->Unit(benchmark::kMillisecond);

void BM_ChernRelations(benchmark::State& state) {
  const GradedLie lie(HodgeNumbers(3, {2, 2, 2, 2}));
  const auto e = random_integral_element(lie, static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(verify_chern_relations(e).pass);
}
BENCHMARK(BM_ChernRelations)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_NlCodim(benchmark::State& state) {
  const HodgeNumbers h(4, {1, 3, 5, 3, 1});
  for (auto _ : state) benchmark::DoNotOptimize(nl_codim(h));
}
BENCHMARK(BM_NlCodim);

void BM_JacobianSlice(benchmark::State& state) {
  const auto fix = plane_fixture(6, 0);
  std::vector<Poly> partials;
  for (std::size_t i = 0; i < fix.F.num_vars(); ++i) partials.push_back(fix.F.derivative(i));
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ideal_slice_dim(partials, k));
}
BENCHMARK(BM_JacobianSlice)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ModularQuotient(benchmark::State& state) {
  const auto fix = plane_fixture(6, 0);
  std::vector<Poly> partials;
  for (std::size_t i = 0; i < fix.F.num_vars(); ++i) partials.push_back(fix.F.derivative(i));
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GradedIdeal ideal(fix.F.num_vars(), partials);
    benchmark::DoNotOptimize(ideal.modular_quotient_dim(k));
  }
}
BENCHMARK(BM_ModularQuotient)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SexticPipeline(benchmark::State& state) {
  for (auto _ : state) {
    const HypersurfaceRing ring(plane_fixture(6, 0));
    benchmark::DoNotOptimize(nl_pipeline(ring).equality);
  }
}
BENCHMARK(BM_SexticPipeline)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
