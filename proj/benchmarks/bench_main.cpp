#include <benchmark/benchmark.h>

#include <random>

#include "koszul/curves/sections.hpp"
#include "koszul/engine/betti.hpp"
#include "koszul/linalg/elimination.hpp"
#include "koszul/runner/models.hpp"
#include "koszul/verify/induction.hpp"
#include "koszul/verify/status.hpp"

using namespace koszul;

namespace {

linalg::RatMatrix sparse_random(std::size_t n, unsigned density_percent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<linalg::Triplet> t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng() % 100 < density_percent) t.push_back({i, j, linalg::Rat(static_cast<long>(rng() % 7) - 3)});
  return linalg::RatMatrix(n, n, std::move(t));
}

}  // namespace

static void BM_RankSparse(benchmark::State& state) {
  const auto m = sparse_random(static_cast<std::size_t>(state.range(0)), 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rank(m));
}
BENCHMARK(BM_RankSparse)->Arg(50)->Arg(100)->Arg(200);

static void BM_KoszulDifferentialRank(benchmark::State& state) {
  const auto l = runner::builtin_model("rational-normal(" + std::to_string(state.range(0)) + ")", 1);
  const engine::KoszulComplex c(l);
  for (auto _ : state) benchmark::DoNotOptimize(c.differential_rank(2, 2));
}
BENCHMARK(BM_KoszulDifferentialRank)->DenseRange(3, 6);

static void BM_BettiTable(benchmark::State& state) {
  const auto l = runner::model_for_cell(state.range(0), 4, 4 + state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(engine::betti_table(l));
}
BENCHMARK(BM_BettiTable)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_SectionBasis(benchmark::State& state) {
  const auto l = runner::builtin_model("canonical-graph(" + std::to_string(state.range(0)) + ")", 1).power(3);
  for (auto _ : state) benchmark::DoNotOptimize(curves::h0_basis(l).dimension());
}
BENCHMARK(BM_SectionBasis)->DenseRange(3, 7);

static void BM_MrcCanonical(benchmark::State& state) {
  const auto l = runner::builtin_model("canonical-graph(" + std::to_string(state.range(0)) + ")", 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify::mrc_status(l).k11);
}
BENCHMARK(BM_MrcCanonical)->DenseRange(3, 6);

static void BM_InductionStrip(benchmark::State& state) {
  const auto base = runner::builtin_model("rational-normal(4)", 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify::induction_driver(base, 5, 1, 9).steps.size());
}
BENCHMARK(BM_InductionStrip)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
