#include <benchmark/benchmark.h>

#include "profinito/abelianization.hpp"
#include "profinito/bs.hpp"
#include "profinito/fingerprint.hpp"
#include "profinito/lowindex.hpp"
#include "profinito/toddcoxeter.hpp"

using namespace profinito;

namespace {

void BM_CosetEnumerate(benchmark::State& state) {
  // Order 10752.
  auto const pres = parse_presentation("< a, b | a^8, b^7, a b a b, A b A b A b >");
  for (auto _ : state) benchmark::DoNotOptimize(coset_enumerate(pres, {}).num_cosets());
}
BENCHMARK(BM_CosetEnumerate)->Unit(benchmark::kMillisecond);

void BM_LowIndex(benchmark::State& state) {
  auto const pres = bs_presentation(BSParams(2, 2));
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(low_index_subgroups(pres, n).size());
}
BENCHMARK(BM_LowIndex)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_LowIndexNormal(benchmark::State& state) {
  auto const pres = bs_presentation(BSParams(2, 2));
  LowIndexOptions opts;
  opts.normal_only = true;
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(low_index_subgroups(pres, n, opts).size());
}
BENCHMARK(BM_LowIndexNormal)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_Fingerprint(benchmark::State& state) {
  auto const pres = bs_presentation(BSParams(1, 2));
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_fingerprint(pres, n).classes.size());
}
BENCHMARK(BM_Fingerprint)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>((i * 7 + j * 13 + i * j) % 19) - 9;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a).free_rank);
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_AbelianizationGrid(benchmark::State& state) {
  for (auto _ : state) {
    for (int m = -10; m <= 10; ++m)
      for (int n = -10; n <= 10; ++n)
        if (m != 0 && n != 0) benchmark::DoNotOptimize(abelianize(bs_presentation(BSParams(m, n))).free_rank);
  }
}
BENCHMARK(BM_AbelianizationGrid)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
