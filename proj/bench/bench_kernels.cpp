#include <benchmark/benchmark.h>

#include <random>

#include "excoh/fplinalg.hpp"
#include "excoh/koszul.hpp"
#include "excoh/liedata.hpp"
#include "excoh/modp.hpp"
#include "excoh/weyl.hpp"

using namespace excoh;

static MatrixFp random_matrix(std::size_t n, std::uint32_t p) {
  std::mt19937_64 rng(7);
  MatrixFp m(p, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<std::uint32_t>(rng() % p);
  return m;
}

static void BM_RowReduceSerial(benchmark::State& s) {
  MatrixFp m = random_matrix(static_cast<std::size_t>(s.range(0)), 3);
  for (auto _ : s) benchmark::DoNotOptimize(serial::row_reduce(m).rank);
}
static void BM_RowReduceParallel(benchmark::State& s) {
  MatrixFp m = random_matrix(static_cast<std::size_t>(s.range(0)), 3);
  for (auto _ : s) benchmark::DoNotOptimize(parallel::row_reduce(m).rank);
}
BENCHMARK(BM_RowReduceSerial)->Arg(128)->Arg(512);
BENCHMARK(BM_RowReduceParallel)->Arg(128)->Arg(512);

static void BM_BocksteinE8Mod2(benchmark::State& s) {
  ModPModel m = build_model(group_data("E8"), 2);
  Exec exec = s.range(0) ? Exec::Parallel : Exec::Serial;
  for (auto _ : s) benchmark::DoNotOptimize(delta_ranks(m.complex(), exec).ranks.size());
}
BENCHMARK(BM_BocksteinE8Mod2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_WeylF4(benchmark::State& s) {
  RootSystemData r = root_system("F4");
  Exec exec = s.range(0) ? Exec::Parallel : Exec::Serial;
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_weyl(r, kDefaultWeylCap, exec).order());
}
BENCHMARK(BM_WeylF4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
