#include <benchmark/benchmark.h>

#include <memory>
#include <random>
#include <vector>

#include "cellcrystal/cellcrystal.hpp"

using namespace cellcrystal;

namespace {

CellCrystal crystal_for(const char* type) { return CellCrystal(longest_word(cartan_data(type))); }

std::vector<CellElem> random_points(int len, std::size_t count, std::int64_t r) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-r, r);
  std::vector<CellElem> out;
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(len));
    for (auto& x : v) x = d(rng);
    out.emplace_back(std::move(v));
  }
  return out;
}

void BM_FTilde(benchmark::State& state, const char* type) {
  const CellCrystal c = crystal_for(type);
  const auto pts = random_points(c.size(), 256, 8);
  std::size_t k = 0;
  for (auto _ : state) {
    const CellElem& x = pts[k++ % pts.size()];
    benchmark::DoNotOptimize(c.f_tilde(x, 1 + static_cast<int>(k % 2)));
  }
}
BENCHMARK_CAPTURE(BM_FTilde, A2, "A2");
BENCHMARK_CAPTURE(BM_FTilde, G2, "G2");
BENCHMARK_CAPTURE(BM_FTilde, E6, "E6");

void BM_BinfGenerate(benchmark::State& state, const char* type) {
  const CellCrystal c = crystal_for(type);
  const int height = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(BinfTable::generate(c, height).size());
}
BENCHMARK_CAPTURE(BM_BinfGenerate, A2, "A2")->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BinfGenerate, G2, "G2")->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BinfGenerate, A3, "A3")->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_BraidTransform(benchmark::State& state) {
  const auto cd = cartan_data("G2");
  const Word a(cd, {1, 2, 1, 2, 1, 2});
  const Word b(cd, {2, 1, 2, 1, 2, 1});
  const auto path = matsumoto_path(a, b);
  const auto pts = random_points(a.size(), 256, 8);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(transform(a, pts[k++ % pts.size()], path));
}
BENCHMARK(BM_BraidTransform);

void BM_Decompose(benchmark::State& state, const char* type) {
  const CellCrystal c = crystal_for(type);
  const HBasis basis = h_basis(c);
  const BinfTable table = BinfTable::generate(c, 24);
  const auto pts = random_points(c.size(), 64, 1);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decompose(basis, table, pts[k++ % pts.size()]));
}
BENCHMARK_CAPTURE(BM_Decompose, A2, "A2")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Decompose, B2, "B2")->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
