#include <benchmark/benchmark.h>

#include <vector>

#include "thinlab/diophantine/apollonian.hpp"
#include "thinlab/diophantine/zaremba.hpp"
#include "thinlab/exact/poly.hpp"
#include "thinlab/expander/cayley.hpp"
#include "thinlab/group/words.hpp"
#include "thinlab/hyperbolic/cartan.hpp"
#include "thinlab/monodromy/hypergeometric.hpp"
#include "thinlab/rotation/rotation.hpp"

using namespace thinlab;

static void BM_Charpoly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  exact::IntMatrix m = exact::IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>((i * 7 + j * 3) % 11) - 5;
  for (auto _ : state) benchmark::DoNotOptimize(exact::charpoly(m));
}
BENCHMARK(BM_Charpoly)->Arg(4)->Arg(8)->Arg(16);

static void BM_Closure(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto s = group::sl2_standard();
  for (auto _ : state) benchmark::DoNotOptimize(expander::congruence_closure(s, q));
  state.counters["vertices"] = static_cast<double>(expander::closure_mod(s, q).order);
}
BENCHMARK(BM_Closure)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);

static void BM_Matvec(benchmark::State& state) {
  const auto c = expander::congruence_closure(group::sl2_standard(), static_cast<std::uint64_t>(state.range(0)));
  std::vector<double> x(c.vertices.size() / 4, 1.0), y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>(i % 17);
  for (auto _ : state) {
    expander::apply_normalized_adjacency(c, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * x.size()));
}
BENCHMARK(BM_Matvec)->Arg(31)->Arg(61);

static void BM_Spectrum(benchmark::State& state) {
  const auto s = group::sl2_standard();
  expander::SpectrumOptions o;
  o.dense_check_max = 0;
  for (auto _ : state) benchmark::DoNotOptimize(expander::cayley_spectrum(s, static_cast<std::uint64_t>(state.range(0)), o));
}
BENCHMARK(BM_Spectrum)->Arg(23)->Arg(41)->Unit(benchmark::kMillisecond);

static void BM_Relations(benchmark::State& state) {
  const auto s = group::unipotent_pair(3);
  for (auto _ : state) benchmark::DoNotOptimize(group::relation_search(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Relations)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_Atlas(benchmark::State& state) {
  const auto families = monodromy::all_families();
  for (auto _ : state) benchmark::DoNotOptimize(monodromy::monodromy_atlas(families, 9));
}
BENCHMARK(BM_Atlas)->Unit(benchmark::kMillisecond);

static void BM_CartanGraph(benchmark::State& state) {
  const hyperbolic::QuadLattice L(exact::IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -3}, {0, 0, -3, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(hyperbolic::min_distance_graph(L, state.range(0)));
}
BENCHMARK(BM_CartanGraph)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_RotationGap(benchmark::State& state) {
  const auto s = rotation::gamma_generators(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rotation::tsigma_gap(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RotationGap)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_Zaremba(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(diophantine::zaremba_scan(5, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Zaremba)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_Apollonian(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(diophantine::apollonian_orbit({-1, 2, 2, 3}, state.range(0)));
}
BENCHMARK(BM_Apollonian)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
