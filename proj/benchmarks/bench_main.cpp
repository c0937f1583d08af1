#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "exactrank/bounds.hpp"
#include "exactrank/gap_profile.hpp"
#include "exactrank/instance.hpp"
#include "exactrank/pit.hpp"
#include "exactrank/ranking.hpp"

namespace {

using namespace exactrank;

void BM_BuildPit(benchmark::State& state) {
  std::vector<item_id> sorted(state.range(0));
  std::iota(sorted.begin(), sorted.end(), item_id{1});
  for (auto _ : state) {
    auto tree = build_pit(sorted);
    benchmark::DoNotOptimize(tree);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildPit)->Range(8, 1 << 14);

void BM_PairwiseCompare(benchmark::State& state) {
  auto gen_rng = derive_stream(1, rng_phase::instance, {0, 16});
  auto inst = generate_instance(instance_family::homo, 16, 0.1, gen_rng);
  oracle_stats stats;
  rng_stream rng(2);
  std::vector<item_id> pair = {3, 11};
  for (auto _ : state) benchmark::DoNotOptimize(compare(inst, stats, pair, rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PairwiseCompare);

void BM_MnlListwiseCompare(benchmark::State& state) {
  auto gen_rng = derive_stream(1, rng_phase::instance, {1, 16});
  auto inst = generate_instance(instance_family::mnl, 16, 0.0, gen_rng);
  oracle_stats stats;
  rng_stream rng(3);
  std::vector<item_id> set(state.range(0));
  std::iota(set.begin(), set.end(), item_id{1});
  for (auto _ : state) benchmark::DoNotOptimize(compare(inst, stats, set, rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MnlListwiseCompare)->Arg(4)->Arg(8)->Arg(16);

void BM_AtcDuel(benchmark::State& state) {
  auto gen_rng = derive_stream(1, rng_phase::instance, {0, 2});
  auto inst = generate_instance(instance_family::homo, 2, 0.1, gen_rng);
  oracle_stats stats;
  instance_oracle oracle(inst, stats);
  rng_stream rng(4);
  const atc_params params{0.05, 0.05};
  for (auto _ : state)
    benchmark::DoNotOptimize(atc(oracle, 1, boundary::item(2), params, rng));
}
BENCHMARK(BM_AtcDuel);

void BM_IirSmall(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  auto gen_rng = derive_stream(1, rng_phase::instance, {0, n});
  auto inst = generate_instance(instance_family::homo, n, 0.1, gen_rng);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    oracle_stats stats;
    instance_oracle oracle(inst, stats);
    auto rng = derive_stream(9, rng_phase::trial, {0, n, trial++});
    benchmark::DoNotOptimize(iir(oracle, n, 0.05, rng));
  }
}
BENCHMARK(BM_IirSmall)->Arg(5)->Arg(10);

void BM_GapProfile(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  auto gen_rng = derive_stream(1, rng_phase::instance, {2, n});
  auto inst = generate_instance(instance_family::random_pairs, n, 0.1, gen_rng);
  for (auto _ : state) {
    auto prof = compute_gap_profile(inst);
    benchmark::DoNotOptimize(lower_bound_eq2(prof, n, 0.01));
  }
}
BENCHMARK(BM_GapProfile)->Arg(16)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
