#include <benchmark/benchmark.h>

#include <map>

#include "isocay/cayley/cayley_graph.hpp"
#include "isocay/ff/field.hpp"
#include "isocay/forge/genset.hpp"
#include "isocay/spectra/moments.hpp"

using namespace isocay;

namespace {

const forge::GenSet& bar(std::uint64_t q, std::uint32_t d) {
  static std::map<std::pair<std::uint64_t, std::uint32_t>, forge::GenSet> cache;
  auto it = cache.find({q, d});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(q, d), forge::symmetrize(forge::build_omega(forge::GenParams::make(q, d, 1))))
             .first;
  return it->second;
}

void BM_ExtFieldMul(benchmark::State& state) {
  const auto E = ff::ExtField::standard(ff::Field::prime(3), 5);
  ff::ExtField::Elem x = E->tau(), acc = 1;
  for (auto _ : state) {
    acc = E->mul(acc, x);
    x = E->add(x, 1);
    if (x == 0) x = 1;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_ExtFieldMul);

void BM_ProjMatMul(benchmark::State& state) {
  const auto& b = bar(3, 5);
  const auto& ctx = *b.params.pgl;
  auto x = ctx.identity();
  std::size_t i = 0;
  for (auto _ : state) {
    x = ctx.mul(x, b.gens[i].proj);
    i = (i + 1) % b.size();
  }
  benchmark::DoNotOptimize(ctx.key(x));
}
BENCHMARK(BM_ProjMatMul);

void BM_BfsBuild53(benchmark::State& state) {
  const auto& b = bar(5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cayley::bfs_build(b, 1'000'000).n());
}
BENCHMARK(BM_BfsBuild53)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_BallMitm35(benchmark::State& state) {
  const auto& b = bar(3, 5);
  const auto projs = b.projs();
  const auto K = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(spectra::ball_mitm_moments(*b.params.pgl, projs, K, 8ull << 30));
}
BENCHMARK(BM_BallMitm35)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
