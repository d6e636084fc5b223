#include <benchmark/benchmark.h>

#include "dyck/bijection.hpp"
#include "dyck/core.hpp"
#include "dyck/enumeration.hpp"

namespace {

void enumerate(benchmark::State& state, dyck::LevelStrategy strategy) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = 0;
    const auto view = dyck::level_terms(n, strategy);
    for (auto it = view.begin(); it != std::default_sentinel; ++it) {
      benchmark::DoNotOptimize(it.raw());
      ++count;
    }
  }
  state.counters["terms"] = static_cast<double>(count);
  state.counters["terms/s"] =
      benchmark::Counter(static_cast<double>(count), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_LevelScan(benchmark::State& state) { enumerate(state, dyck::LevelStrategy::Scan); }
void BM_LevelSuffixDfs(benchmark::State& state) {
  enumerate(state, dyck::LevelStrategy::SuffixDfs);
}
BENCHMARK(BM_LevelScan)->DenseRange(18, 22, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LevelSuffixDfs)->DenseRange(18, 22, 2)->Unit(benchmark::kMillisecond);

void BM_LevelStats(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dyck::level_stats(static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_LevelStats)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

// Terms 1..9 of the chain rooted at 45; bit lengths grow roughly fourfold.
const std::vector<dyck::DyckNumber>& chain45() {
  static const auto terms = dyck::chain(dyck::DyckNumber(std::uint64_t{45}), 9).terms;
  return terms;
}

void BM_Bij(benchmark::State& state) {
  const auto& d = chain45()[static_cast<std::size_t>(state.range(0)) - 1];
  for (auto _ : state) {
    benchmark::DoNotOptimize(dyck::bij(d));
  }
  state.SetLabel(std::to_string(d.bit_length()) + " bits");
}
BENCHMARK(BM_Bij)->DenseRange(1, 8);

void BM_InvBij(benchmark::State& state) {
  const auto& d = chain45()[static_cast<std::size_t>(state.range(0)) - 1];
  for (auto _ : state) {
    benchmark::DoNotOptimize(dyck::inv_bij(d));
  }
  state.SetLabel(std::to_string(d.bit_length()) + " bits");
}
BENCHMARK(BM_InvBij)->DenseRange(1, 9);

void BM_RootOf(benchmark::State& state) {
  const auto& d = chain45()[static_cast<std::size_t>(state.range(0)) - 1];
  for (auto _ : state) {
    benchmark::DoNotOptimize(dyck::root_of(d));
  }
  state.SetLabel(std::to_string(d.bit_length()) + " bits");
}
BENCHMARK(BM_RootOf)->Arg(4)->Arg(8)->Arg(9);

void BM_Validate(benchmark::State& state) {
  const auto& d = chain45()[static_cast<std::size_t>(state.range(0)) - 1];
  const dyck::Natural v = d.value();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dyck::validate(v));
  }
  state.SetLabel(std::to_string(d.bit_length()) + " bits");
}
BENCHMARK(BM_Validate)->Arg(3)->Arg(8)->Arg(9);

void BM_ValidateU64(benchmark::State& state) {
  std::uint64_t v = 0x5555555555555555ULL;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dyck::validate_u64(v));
    v += 2;
  }
}
BENCHMARK(BM_ValidateU64);

}  // namespace

// The distro ships benchmark_main only as LTO bytecode, so the main is local.
BENCHMARK_MAIN();
