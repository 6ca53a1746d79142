// Serial reference vs OpenMP kernels on the realistic workloads: redundancy
// pruning mid-elimination, the per-row LP batch behind the gap certificate,
// full projections, and a verification sweep.

#include <benchmark/benchmark.h>

#include "cyclicap/channel.hpp"
#include "cyclicap/fourier_motzkin.hpp"
#include "cyclicap/polyhedra.hpp"
#include "cyclicap/regions.hpp"
#include "cyclicap/sampling.hpp"

using namespace cyclicap;

namespace {

const ChannelInstance& bench_channel(int k) {
  static Pcg32 rng(8080, 0);
  static const ChannelInstance k5 = sample_weak_channel(5, rng);
  static const ChannelInstance k6 = sample_weak_channel(6, rng);
  return k == 5 ? k5 : k6;
}

// a mid-projection system: the densest pruning input in the pipeline
const FmSystem& pruning_workload() {
  static const FmSystem sys = [] {
    const ChannelInstance& ch = bench_channel(6);
    const HkParams hk = hk_params(ch, etw_split(ch));
    FmSystem s = polymatroid_system(hk, 6);
    for (int t = 1; t <= 3; ++t) {
      s = remove_redundant(eliminate_variable(s, "T_" + std::to_string(t)),
                           Exec::Seq);
    }
    return eliminate_variable(s, "T_4");
  }();
  return sys;
}

void bm_remove_redundant(benchmark::State& state, Exec exec) {
  const FmSystem& sys = pruning_workload();
  for (auto _ : state) {
    benchmark::DoNotOptimize(remove_redundant(sys, exec));
  }
}

void bm_certified_gap(benchmark::State& state, Exec exec) {
  const ChannelInstance& ch = bench_channel(6);
  const auto inner = achievable_region(hk_params(ch, etw_split(ch)), 6);
  const auto outer = outer_region(outer_params(ch), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certified_gap(inner, outer, 6, exec));
  }
}

void bm_project_to_rates(benchmark::State& state, Exec exec) {
  const ChannelInstance& ch = bench_channel(5);
  const HkParams hk = hk_params(ch, etw_split(ch));
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_to_rates(hk, 5, exec));
  }
}

// outer-level parallelism across instances, serial internals: the layout the
// verification sweeps use
void bm_verify_sweep(benchmark::State& state, Exec exec) {
  for (auto _ : state) {
    std::vector<char> ok(16, 0);
    parallel_for(exec, 16, [&](int t) {
      Pcg32 rng(42, static_cast<std::uint64_t>(t));
      const ChannelInstance ch = sample_weak_channel(4, rng);
      const HkParams hk = hk_params(ch, etw_split(ch));
      ok[t] = regions_equal(project_to_rates(hk, 4, Exec::Seq),
                            achievable_region(hk, 4), kIncludeTol, Exec::Seq);
    });
    benchmark::DoNotOptimize(ok);
  }
}

}  // namespace

BENCHMARK_CAPTURE(bm_remove_redundant, serial, Exec::Seq);
BENCHMARK_CAPTURE(bm_remove_redundant, openmp, Exec::Par);
BENCHMARK_CAPTURE(bm_certified_gap, serial, Exec::Seq);
BENCHMARK_CAPTURE(bm_certified_gap, openmp, Exec::Par);
BENCHMARK_CAPTURE(bm_project_to_rates, serial, Exec::Seq);
BENCHMARK_CAPTURE(bm_project_to_rates, openmp, Exec::Par);
BENCHMARK_CAPTURE(bm_verify_sweep, serial, Exec::Seq);
BENCHMARK_CAPTURE(bm_verify_sweep, openmp, Exec::Par);

BENCHMARK_MAIN();
