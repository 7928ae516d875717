#include <benchmark/benchmark.h>

#include <random>

#include "membank/arbiter.hpp"
#include "membank/fft.hpp"
#include "membank/schedule.hpp"
#include "membank/sim.hpp"
#include "membank/timing.hpp"
#include "membank/transpose.hpp"

using namespace membank;

namespace {

LaneRequestSet random_op(std::mt19937& rng) {
  std::uniform_int_distribution<uint32_t> addr(0, 0xFFFF);
  LaneRequestSet op;
  for (uint32_t lane = 0; lane < kNumLanes; ++lane) op.set(lane, addr(rng));
  return op;
}

void BM_ConflictProfile(benchmark::State& state) {
  std::mt19937 rng(1);
  BankedConfig cfg = BankedConfig::make(16, BankMapping::lsb(4));
  LaneRequestSet op = random_op(rng);
  for (auto _ : state) benchmark::DoNotOptimize(conflict_profile(op, cfg));
}
BENCHMARK(BM_ConflictProfile);

void BM_ArbiterDrain(benchmark::State& state) {
  for (auto _ : state) {
    ArbiterState st{0xFFFF};
    while (!st.done()) {
      auto [lane, next] = arbiter_step(st);
      benchmark::DoNotOptimize(lane);
      st = next;
    }
  }
}
BENCHMARK(BM_ArbiterDrain);

void BM_BuildSchedule(benchmark::State& state) {
  std::mt19937 rng(2);
  BankedConfig cfg =
      BankedConfig::make(uint32_t(state.range(0)),
                         BankMapping::lsb(state.range(0) == 4   ? 2
                                          : state.range(0) == 8 ? 3
                                                                : 4));
  LaneRequestSet op = random_op(rng);
  for (auto _ : state) benchmark::DoNotOptimize(build_schedule(op, cfg));
}
BENCHMARK(BM_BuildSchedule)->Arg(4)->Arg(8)->Arg(16);

void BM_BankedReadStream(benchmark::State& state) {
  std::mt19937 rng(3);
  std::vector<LaneRequestSet> ops(512);
  for (auto& op : ops) op = random_op(rng);
  BankedConfig cfg = BankedConfig::make(16, BankMapping::lsb(4));
  TimingParams params;
  for (auto _ : state)
    benchmark::DoNotOptimize(banked_read_cycles(ops, cfg, params));
}
BENCHMARK(BM_BankedReadStream);

void BM_RunTranspose128(benchmark::State& state) {
  KernelTrace trace = gen_transpose(128, GenMode::Calibrated);
  MemArchitecture arch = MemArchitecture::make_banked(16, BankMapping::lsb(4));
  TimingParams params;
  for (auto _ : state) benchmark::DoNotOptimize(run(trace, arch, params));
}
BENCHMARK(BM_RunTranspose128);

void BM_RunFftRadix16(benchmark::State& state) {
  KernelTrace trace = gen_fft(16, 4096);
  MemArchitecture arch = MemArchitecture::make_banked(16, BankMapping::lsb(4));
  TimingParams params;
  for (auto _ : state) benchmark::DoNotOptimize(run(trace, arch, params));
}
BENCHMARK(BM_RunFftRadix16);

}  // namespace

BENCHMARK_MAIN();
