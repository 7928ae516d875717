#include <doctest.h>

#include <cmath>
#include <random>

#include "membank/conflict.hpp"
#include "membank/fft.hpp"
#include "membank/sim.hpp"
#include "membank/transpose.hpp"

using namespace membank;

namespace {

MemArchitecture banked(uint32_t banks, uint32_t shift = 0) {
  uint32_t width = banks == 4 ? 2 : (banks == 8 ? 3 : 4);
  return MemArchitecture::make_banked(
      banks, shift ? BankMapping::bit_slice(shift, width) : BankMapping::lsb(width));
}

std::vector<MemArchitecture> all_nine() {
  return {MemArchitecture::multiport_4r1w(),
          MemArchitecture::multiport_4r2w(),
          MemArchitecture::multiport_4r1w_vb(),
          banked(16),
          banked(16, 2),
          banked(8),
          banked(8, 2),
          banked(4),
          banked(4, 2)};
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

}  // namespace

TEST_CASE("calibrated multi-port transpose matches the profiled cycle counts") {
  struct Expect {
    uint32_t n;
    uint64_t load, store1w, store2w, total1w, total2w;
    double time1w, time2w;
  };
  const Expect table[] = {
      {32, 256, 1024, 512, 1671, 1159, 2.17, 1.93},
      {64, 1024, 4096, 2048, 5479, 3431, 7.1, 5.72},
      {128, 4096, 16384, 8192, 20775, 12583, 26.95, 20.97},
  };
  TimingParams params;
  for (const Expect& e : table) {
    KernelTrace t = gen_transpose(e.n, GenMode::Calibrated);
    SimMetrics m1 = run(t, MemArchitecture::multiport_4r1w(), params);
    CHECK(m1.load_cycles == e.load);
    CHECK(m1.store_cycles == e.store1w);
    CHECK(m1.total_cycles == e.total1w);
    CHECK(std::abs(round2(m1.time_us) - e.time1w) <= 0.0100001);

    SimMetrics m2 = run(t, MemArchitecture::multiport_4r2w(), params);
    CHECK(m2.load_cycles == e.load);
    CHECK(m2.store_cycles == e.store2w);
    CHECK(m2.total_cycles == e.total2w);
    CHECK(std::abs(round2(m2.time_us) - e.time2w) <= 0.0100001);
  }
}

TEST_CASE("transpose cycle breakdown is additive for every architecture") {
  TimingParams params;
  for (uint32_t n : {32u, 64u, 128u}) {
    KernelTrace t = gen_transpose(n, GenMode::Calibrated);
    for (const auto& arch : all_nine()) {
      if (arch.kind == ArchKind::MultiPort4R1W_VB) continue;  // not profiled
      SimMetrics m = run(t, arch, params);
      REQUIRE(m.overlap_credit == 0);
      REQUIRE(m.common_cycles() + m.load_cycles + m.store_cycles == m.total_cycles);
    }
  }
}

TEST_CASE("banked transpose stores: conflict sum plus calibrated overhead") {
  TimingParams params;
  struct Expect {
    uint32_t n;
    uint64_t store_cycles;
  };
  for (Expect e : {Expect{32, 1054}, Expect{64, 4216}, Expect{128, 16864}}) {
    KernelTrace t = gen_transpose(e.n, GenMode::Calibrated);
    for (uint32_t banks : {4u, 8u, 16u}) {
      SimMetrics m = run(t, banked(banks), params);
      REQUIRE(m.store_cycles == e.store_cycles);
      REQUIRE(std::abs(*m.write_bank_efficiency - 6.1) <= 0.3);
    }
  }
}

TEST_CASE("bank efficiency formula on profiled pairs") {
  CHECK(std::round(bank_efficiency(64, 168) * 10) / 10 == 38.1);
  CHECK(std::round(bank_efficiency(64, 106) * 10) / 10 == 60.4);
  CHECK(std::round(bank_efficiency(64, 1054) * 10) / 10 == 6.1);
  CHECK(bank_efficiency(64, 64) == 100.0);
  CHECK_THROWS_AS(bank_efficiency(64, 0), std::invalid_argument);
}

TEST_CASE("compute efficiency formula on profiled pairs") {
  CHECK(std::round(compute_efficiency(12384, 37214) * 10) / 10 == 33.3);
  CHECK(std::round(compute_efficiency(13440, 86817) * 10) / 10 == 15.5);
  CHECK(compute_efficiency(100, 100) == 100.0);
}

TEST_CASE("functional checksum is architecture independent; cycles are not") {
  TimingParams params;
  KernelTrace t = gen_fft(16, 4096);
  std::string checksum;
  for (const auto& arch : all_nine()) {
    SimMetrics m = run(t, arch, params);
    if (checksum.empty()) checksum = m.functional_checksum;
    REQUIRE(m.functional_checksum == checksum);
  }
  SimMetrics lsb = run(t, banked(16), params);
  SimMetrics off = run(t, banked(16, 2), params);
  CHECK(lsb.functional_checksum == off.functional_checksum);
  CHECK(lsb.total_cycles != off.total_cycles);
}

TEST_CASE("two runs with identical inputs agree exactly") {
  TimingParams params;
  KernelTrace t = gen_fft(8, 4096, GenMode::Calibrated);
  SimMetrics a = run(t, banked(8, 2), params);
  SimMetrics b = run(t, banked(8, 2), params);
  CHECK(a.total_cycles == b.total_cycles);
  CHECK(a.time_us == b.time_us);
  CHECK(a.functional_checksum == b.functional_checksum);
}

TEST_CASE("capacity ceilings are enforced") {
  TimingParams params;
  KernelTrace t = gen_transpose(32, GenMode::Calibrated);
  CHECK_THROWS_AS(run(t, MemArchitecture::multiport_4r1w(), params, 128), CapacityError);
  CHECK_THROWS_AS(run(t, MemArchitecture::multiport_4r1w_vb(), params, 128),
                  CapacityError);
  CHECK_THROWS_AS(run(t, MemArchitecture::multiport_4r2w(), params, 256), CapacityError);
  CHECK_THROWS_AS(run(t, banked(16), params, 512), CapacityError);
  CHECK_NOTHROW(run(t, MemArchitecture::multiport_4r2w(), params, 224));

  // Footprint beyond the configured size is also a capacity fault.
  KernelTrace big = gen_fft(16, 4096);
  CHECK_THROWS_AS(run(big, banked(16), params, 32), CapacityError);
}

TEST_CASE("multi-port loads and stores have no overhead terms") {
  TimingParams params;
  KernelTrace t = gen_fft(16, 4096, GenMode::Calibrated);
  SimMetrics m1 = run(t, MemArchitecture::multiport_4r1w(), params);
  CHECK(m1.load_cycles == 1536 * 4);
  CHECK(m1.twiddle_load_cycles == 960 * 4);
  CHECK(m1.store_cycles == 1536 * 16);
  SimMetrics m2 = run(t, MemArchitecture::multiport_4r2w(), params);
  CHECK(m2.store_cycles == 1536 * 8);
  CHECK(m2.total_cycles == 37214);  // components sum exactly
  CHECK(std::round(*m2.compute_efficiency_pct * 10) / 10 == 33.3);
}

TEST_CASE("non-blocking stores overlap following compute up to their occupancy") {
  KernelTrace t;
  t.threads = 16;
  t.name = "synthetic";
  t.data_words = 64;
  t.twiddle_base = 64;
  TraceBuilder b(t);
  b.memory(OpCategory::Load, 0, true, [](uint32_t, uint32_t lane) { return lane; });
  b.memory(OpCategory::Store, 0, /*blocking=*/false,
           [](uint32_t, uint32_t lane) { return 16 * lane; });  // one bank
  b.compute(OpCategory::IntOp, ComputeKind::AddressCalc);
  b.compute(OpCategory::IntOp, ComputeKind::AddressCalc);
  b.compute(OpCategory::OtherOp, ComputeKind::AddressCalc);
  b.memory(OpCategory::Load, 1, true, [](uint32_t, uint32_t lane) { return lane; });

  TimingParams params;
  SimMetrics m = run(t, banked(16), params, 64);
  // Store occupancy is 16 + 8; only 3 compute cycles are available to hide.
  CHECK(m.overlap_credit == 3);
  CHECK(m.store_cycles == 16 + 8);
  CHECK(m.load_cycles == 2 + 52);
  CHECK(m.total_cycles == 3 + 54 + 24 - 3);

  // The same trace with a blocking store gets no credit.
  for (WarpOp& op : t.ops)
    if (op.category == OpCategory::Store) op.blocking = true;
  SimMetrics mb = run(t, banked(16), params, 64);
  CHECK(mb.overlap_credit == 0);
  CHECK(mb.total_cycles == m.total_cycles + 3);
}

TEST_CASE("banked sim totals equal the discrete-event oracle on random traces") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<uint32_t> addr(0, 1023);
  std::uniform_int_distribution<int> instr_count(1, 60);
  std::uniform_int_distribution<int> kind(0, 3);
  TimingParams params;
  for (int iter = 0; iter < 1000; ++iter) {
    KernelTrace t;
    t.threads = 256;
    t.name = "random";
    t.data_words = 1024;
    t.twiddle_base = 1024;
    TraceBuilder b(t);
    b.memory(OpCategory::Load, 0, true,
             [&](uint32_t, uint32_t lane) { return lane; });  // seed reg 0
    int n = instr_count(rng);
    for (int i = 0; i < n; ++i) {
      switch (kind(rng)) {
        case 0:
          b.memory(OpCategory::Load, 0, true,
                   [&](uint32_t, uint32_t lane) { return (addr(rng) + lane) & 1023; });
          break;
        case 1:
          b.memory(OpCategory::Store, 0, true,
                   [&](uint32_t, uint32_t lane) { return (addr(rng) * lane) & 1023; });
          break;
        default:
          b.compute(OpCategory::IntOp, ComputeKind::AddressCalc);
          break;
      }
    }
    MemArchitecture arch = banked(iter % 2 ? 16 : 8);
    SimMetrics m = run(t, arch, params, 4);

    // Event-stepped reference over the extracted operation lists.
    BankedConfig cfg = BankedConfig::make(arch.banked->num_banks,
                                          arch.banked->mapping, 1024);
    auto stream_cycles = [&](OpCategory cat, double overhead) {
      double clock = 0;
      uint32_t last_instr = UINT32_MAX;
      for (const WarpOp& op : t.ops) {
        if (op.category != cat) continue;
        if (op.instr_index != last_instr) {
          clock += overhead;
          last_instr = op.instr_index;
        }
        clock += conflict_profile(op.requests, cfg).max_conflicts;
      }
      return uint64_t(std::llround(clock));
    };
    REQUIRE(m.load_cycles ==
            stream_cycles(OpCategory::Load, params.per_instruction_overhead_read));
    REQUIRE(m.store_cycles ==
            stream_cycles(OpCategory::Store, params.per_instruction_overhead_write));
  }
}

TEST_CASE("fft ordering across banked variants, native radix-16") {
  TimingParams params;
  KernelTrace t = gen_fft(16, 4096);
  uint64_t off16 = run(t, banked(16, 2), params).total_cycles;
  uint64_t lsb16 = run(t, banked(16), params).total_cycles;
  uint64_t lsb8 = run(t, banked(8), params).total_cycles;
  uint64_t lsb4 = run(t, banked(4), params).total_cycles;
  CHECK(off16 <= lsb16);
  CHECK(lsb16 <= lsb8);
  CHECK(lsb8 <= lsb4);
}

TEST_CASE("VB store cycles sit between the 2W and 1W equivalents") {
  TimingParams params;
  for (uint32_t radix : {4u, 8u, 16u}) {
    KernelTrace t = gen_fft(radix, 4096);
    SimMetrics vb = run(t, MemArchitecture::multiport_4r1w_vb(), params);
    uint64_t ops = vb.store_ops;
    REQUIRE(vb.store_cycles >= ops * 8);
    REQUIRE(vb.store_cycles <= ops * 16);
  }
}
