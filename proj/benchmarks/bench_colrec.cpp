#include <colrec/gamma.hpp>
#include <colrec/group_spec.hpp>
#include <colrec/poset_matrix.hpp>

#include <benchmark/benchmark.h>

#include <memory>

namespace {

using namespace colrec;

PosetPtr poset(int v) { return std::make_shared<const SubgraphPoset>(enumerate_poset(v)); }

void BM_EnumeratePoset(benchmark::State& state) {
  const int v = static_cast<int>(state.range(0));
  std::size_t size = 0;
  for (auto _ : state) {
    auto p = enumerate_poset(v);
    size = p.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["members"] = static_cast<double>(size);
}
BENCHMARK(BM_EnumeratePoset)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_IsoClasses(benchmark::State& state) {
  auto p = enumerate_poset(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(iso_class_blocks(p));
}
BENCHMARK(BM_IsoClasses)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

void BM_MMatrixSymbolic(benchmark::State& state) {
  auto p = poset(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m_matrix(p));
}
BENCHMARK(BM_MMatrixSymbolic)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_MMatrixAtPoint(benchmark::State& state) {
  auto p = poset(static_cast<int>(state.range(0)));
  const Rational r = ratio(3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(m_at(p, r));
}
BENCHMARK(BM_MMatrixAtPoint)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

void BM_MobiusValues(benchmark::State& state) {
  auto p = poset(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mobius_values(p));
}
BENCHMARK(BM_MobiusValues)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

// Gamma on K_v with A = F - {0} over Z/f: args (v, f).
void BM_GammaBrute(benchmark::State& state) {
  const auto e = EdgeSet::complete(static_cast<int>(state.range(0)));
  auto a = allowed_complement_identity(make_group({static_cast<int>(state.range(1))}));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_bruteforce(e, a));
}
BENCHMARK(BM_GammaBrute)->Args({4, 7})->Args({4, 16})->Args({5, 7})->Unit(benchmark::kMillisecond);

void BM_GammaCycle(benchmark::State& state) {
  const auto e = EdgeSet::complete(static_cast<int>(state.range(0)));
  auto a = allowed_complement_identity(make_group({static_cast<int>(state.range(1))}));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_cyclespace(e, a));
}
BENCHMARK(BM_GammaCycle)->Args({4, 7})->Args({4, 16})->Args({5, 7})->Unit(benchmark::kMillisecond);

void BM_GammaFourier(benchmark::State& state) {
  const auto e = EdgeSet::complete(static_cast<int>(state.range(0)));
  auto a = allowed_complement_identity(make_group({static_cast<int>(state.range(1))}));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_fourier(e, a));
}
BENCHMARK(BM_GammaFourier)->Args({3, 7})->Args({4, 5})->Args({4, 7})->Unit(benchmark::kMillisecond);

void BM_VerifyReciprocity(benchmark::State& state) {
  auto p = poset(static_cast<int>(state.range(0)));
  auto a = parse_allowed_spec(parse_group_spec("Z7"), "interval:1");
  for (auto _ : state) benchmark::DoNotOptimize(verify_reciprocity(p, a).passed());
}
BENCHMARK(BM_VerifyReciprocity)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
