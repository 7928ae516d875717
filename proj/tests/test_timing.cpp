#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "membank/schedule.hpp"
#include "membank/timing.hpp"

using namespace membank;

namespace {

LaneRequestSet spread16() {
  LaneRequestSet req;
  for (uint32_t lane = 0; lane < 16; ++lane) req.set(lane, lane);
  return req;
}

LaneRequestSet same_bank16() {
  LaneRequestSet req;
  for (uint32_t lane = 0; lane < 16; ++lane) req.set(lane, 16 * lane);
  return req;
}

// Event-stepped reference: a clock that advances through the issue pipeline
// instruction by instruction, spacing each operation by its schedule
// duration (an independent path through build_schedule rather than the
// conflict counters).
uint64_t event_oracle(const std::vector<LaneRequestSet>& ops, const BankedConfig& cfg,
                      const TimingParams& p, double per_instr_overhead) {
  double clock = 0;
  for (size_t i = 0; i < ops.size(); ++i) {
    if (i % p.ops_per_instruction == 0) clock += per_instr_overhead;
    clock += build_schedule(ops[i], cfg).duration;
  }
  return uint64_t(std::llround(clock));
}

}  // namespace

TEST_CASE("conflict-free reads cost one cycle each plus the instruction overhead") {
  std::vector<LaneRequestSet> ops(16, spread16());
  BankedConfig cfg = BankedConfig::make(16, BankMapping::lsb(4));
  TimingParams p;
  CHECK(banked_read_cycles(ops, cfg, p) == 16 + 26);
}

TEST_CASE("fully conflicted instruction spans 16..256 cycles") {
  BankedConfig cfg = BankedConfig::make(16, BankMapping::lsb(4));
  TimingParams p;
  std::vector<LaneRequestSet> worst(16, same_bank16());
  CHECK(banked_read_cycles(worst, cfg, p) == 256 + 26);
  std::vector<LaneRequestSet> best(16, spread16());
  CHECK(banked_read_cycles(best, cfg, p) == 16 + 26);
}

TEST_CASE("random read streams match the event-stepped oracle") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<uint32_t> addr(0, 0xFFFF);
  std::uniform_int_distribution<int> len(1, 1000);
  std::uniform_int_distribution<int> coin(0, 3);
  TimingParams p;
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<LaneRequestSet> ops(len(rng));
    for (auto& op : ops)
      for (uint32_t lane = 0; lane < kNumLanes; ++lane)
        if (coin(rng) != 0) op.set(lane, addr(rng));
    uint32_t banks = iter % 3 == 0 ? 4 : (iter % 3 == 1 ? 8 : 16);
    uint32_t width = banks == 4 ? 2 : (banks == 8 ? 3 : 4);
    BankedConfig cfg = BankedConfig::make(banks, BankMapping::lsb(width));
    REQUIRE(banked_read_cycles(ops, cfg, p) ==
            event_oracle(ops, cfg, p, p.per_instruction_overhead_read));
    REQUIRE(banked_write_cycles(ops, cfg, p) ==
            event_oracle(ops, cfg, p, p.per_instruction_overhead_write));
  }
}

TEST_CASE("writes: single active lane and all-inactive edge cases") {
  BankedConfig cfg = BankedConfig::make(16, BankMapping::lsb(4));
  TimingParams p;
  LaneRequestSet one;
  one.set(3, 42);
  std::vector<LaneRequestSet> ops = {one};
  CHECK(banked_write_cycles(ops, cfg, p) ==
        1 + uint64_t(std::llround(p.per_instruction_overhead_write)));

  std::vector<LaneRequestSet> idle = {LaneRequestSet{}};
  CHECK(banked_write_cycles(idle, cfg, p) ==
        0 + uint64_t(std::llround(p.per_instruction_overhead_write)));
}

TEST_CASE("adding conflicts never decreases banked cycles") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<uint32_t> addr(0, 0xFFFF);
  BankedConfig cfg = BankedConfig::make(16, BankMapping::lsb(4));
  TimingParams p;
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<LaneRequestSet> ops(8);
    for (auto& op : ops)
      for (uint32_t lane = 0; lane < kNumLanes; ++lane) op.set(lane, addr(rng));
    uint64_t before = banked_read_cycles(ops, cfg, p);
    // Pile one more lane onto the most conflicted bank of one operation.
    std::uniform_int_distribution<size_t> pick(0, ops.size() - 1);
    LaneRequestSet& op = ops[pick(rng)];
    ConflictProfile profile = conflict_profile(op, cfg);
    for (uint32_t lane = 0; lane < kNumLanes; ++lane) {
      if (map_bank(op.lanes[lane].address, cfg.mapping) ==
          uint32_t(std::max_element(profile.per_bank_count.begin(),
                                    profile.per_bank_count.end()) -
                   profile.per_bank_count.begin())) {
        op.lanes[1].address = op.lanes[lane].address;
        break;
      }
    }
    uint64_t after = banked_read_cycles(ops, cfg, p);
    REQUIRE(after >= before);
  }
}

TEST_CASE("multiport serialization over ports") {
  CHECK(multiport_cycles(64, 4) == 256);
  CHECK(multiport_cycles(64, 1) == 1024);
  CHECK(multiport_cycles(256, 2) == 2048);
  CHECK(multiport_cycles(0, 4) == 0);
  CHECK_THROWS_AS(multiport_cycles(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(multiport_cycles(1, 0), std::invalid_argument);
}

TEST_CASE("multiport cycles halve exactly when ports double") {
  for (uint64_t n : {1ull, 7ull, 64ull, 1000ull}) {
    CHECK(multiport_cycles(n, 1) == 2 * multiport_cycles(n, 2));
    CHECK(multiport_cycles(n, 2) == 2 * multiport_cycles(n, 4));
  }
}

TEST_CASE("VB writes: spread and single-sub-memory extremes") {
  BankMapping vb = BankMapping::bit_slice(5, 2);
  TimingParams p;

  // 4 lanes per sub-memory: 4 cycles per operation.
  LaneRequestSet even;
  for (uint32_t lane = 0; lane < 16; ++lane) even.set(lane, 32 * lane);
  std::vector<LaneRequestSet> ops(16, even);
  CHECK(vb_write_cycles(ops, vb, p) ==
        16 * 4 + uint64_t(std::llround(16.0 / p.ops_per_instruction *
                                       p.per_instruction_overhead_write)));

  // All 16 lanes into one sub-memory degrades to the 1W rate.
  LaneRequestSet clumped;
  for (uint32_t lane = 0; lane < 16; ++lane) clumped.set(lane, 128 * lane);
  std::vector<LaneRequestSet> worst(16, clumped);
  CHECK(vb_write_cycles(worst, vb, p) >= 16 * 16);
}

TEST_CASE("cycles to wall time at the two clock domains") {
  CHECK(std::abs(cycles_to_microseconds(1671, 771.0) - 2.17) < 0.005);
  CHECK(std::abs(cycles_to_microseconds(1159, 600.0) - 1.93) < 0.005);
  CHECK(cycles_to_microseconds(0, 771.0) == 0.0);
  CHECK_THROWS_AS(cycles_to_microseconds(1, 0.0), std::invalid_argument);
}

TEST_CASE("cycle counts are clock independent") {
  std::vector<LaneRequestSet> ops(4, spread16());
  BankedConfig cfg = BankedConfig::make(16, BankMapping::lsb(4));
  TimingParams p;
  uint64_t cycles = banked_read_cycles(ops, cfg, p);
  CHECK(cycles_to_microseconds(cycles, 771.0) != cycles_to_microseconds(cycles, 600.0));
}

TEST_CASE("empty operation lists are rejected") {
  BankedConfig cfg = BankedConfig::make(16, BankMapping::lsb(4));
  TimingParams p;
  std::vector<LaneRequestSet> none;
  CHECK_THROWS_AS(banked_read_cycles(none, cfg, p), std::invalid_argument);
  CHECK_THROWS_AS(banked_write_cycles(none, cfg, p), std::invalid_argument);
  CHECK_THROWS_AS(vb_write_cycles(none, BankMapping::bit_slice(5, 2), p),
                  std::invalid_argument);
}
