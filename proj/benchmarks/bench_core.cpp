#include "bidisk/commutant.hpp"
#include "bidisk/spectral.hpp"
#include "bidisk/subspace.hpp"

#include <benchmark/benchmark.h>

using namespace bidisk;

static void BM_ApplyMp(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Context ctx = build_context(k, k);
  const Window w = make_window(8);
  SparseVector f(w);
  for (const MonomialIndex& x : window_basis(ctx, make_window(7))) f.add(x, Rational(x.i + 1, x.j + 2));
  for (auto _ : state) benchmark::DoNotOptimize(apply(ctx, OpTag::Mp, f));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.size()));
}
BENCHMARK(BM_ApplyMp)->Arg(1)->Arg(2)->Arg(3);

static void BM_ClassOf(benchmark::State& state) {
  const Context ctx = build_context(3, 4);
  const MonomialIndex x = ctx.index(1, 2, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(class_of(ctx, x));
}
BENCHMARK(BM_ClassOf)->Arg(0)->Arg(4)->Arg(16);

static void BM_GenerateReducing(benchmark::State& state) {
  const Context ctx = build_context(2, 2);
  const Window w = make_window(static_cast<int>(state.range(0)), 2);
  SparseVector f = SparseVector::monomial(ctx.index(0, 0, 0, 0), w);
  f.add(ctx.index(0, 1, 0, 0), Rational(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(generate_reducing(ctx, f, w));
}
BENCHMARK(BM_GenerateReducing)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_CommutantDimension(benchmark::State& state) {
  const Context ctx = build_context(2, 2);
  const Window w = make_window(static_cast<int>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(commutant_dimension(ctx, w, 1e-8));
}
BENCHMARK(BM_CommutantDimension)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
