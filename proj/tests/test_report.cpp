#include <doctest.h>

#include <map>
#include <set>

#include "membank/config_file.hpp"
#include "membank/reference_tables.hpp"
#include "membank/report.hpp"

using namespace membank;

TEST_CASE("reference transcription: transpose columns are additive") {
  // The published 4-bank 128x128 rows are the one place where the table's own
  // components disagree with its total, by 90 cycles; pinned verbatim.
  for (const ReferenceRow& row : reference_table()) {
    if (std::string(row.kernel).rfind("transpose", 0) != 0) continue;
    uint64_t sum = row.common.total() + row.load_cycles + row.store_cycles;
    if (std::string(row.kernel) == "transpose-128" &&
        std::string(row.arch).rfind("banked4", 0) == 0) {
      CHECK(row.total_cycles - sum == 90);
    } else {
      CHECK(sum == row.total_cycles);
    }
  }
}

TEST_CASE("reference transcription: documented totals") {
  const ReferenceRow* t32 = find_reference("transpose-32", "4r1w");
  REQUIRE(t32 != nullptr);
  CHECK(t32->common.total() == 391);
  CHECK(391 + 256 + 1024 == t32->total_cycles);

  // FFT components: radix-8 rows are exactly additive; the radix-4 and
  // radix-16 4R-1W totals run slightly below their component sums, and the
  // radix-16 4R-2W total slightly above (its printed store count).
  auto sum_of = [](const ReferenceRow& r) {
    return r.common.total() + r.load_cycles + r.twiddle_cycles + r.store_cycles;
  };
  const ReferenceRow* r8 = find_reference("fft-r8", "4r1w");
  CHECK(sum_of(*r8) == r8->total_cycles);
  CHECK(sum_of(*find_reference("fft-r8", "4r2w")) ==
        find_reference("fft-r8", "4r2w")->total_cycles);
  const ReferenceRow* r4 = find_reference("fft-r4", "4r1w");
  CHECK(sum_of(*r4) - r4->total_cycles == 94);
  const ReferenceRow* r16 = find_reference("fft-r16", "4r1w");
  CHECK(sum_of(*r16) - r16->total_cycles == 60);
  const ReferenceRow* r16b = find_reference("fft-r16", "4r2w");
  CHECK(r16b->total_cycles - sum_of(*r16b) == 60);
}

TEST_CASE("reference table covers the 51 profiled combinations") {
  CHECK(reference_table().size() == 51);
  CHECK(find_reference("transpose-32", "4r1w-vb") == nullptr);
  CHECK(find_reference("fft-r16", "4r1w-vb") != nullptr);
}

TEST_CASE("default matrix shape: 24 transpose + 27 fft rows") {
  auto scenarios = default_matrix();
  CHECK(scenarios.size() == 51);
  size_t transpose = 0, fft = 0;
  for (const Scenario& s : scenarios)
    (s.kernel.kind == KernelKind::Transpose ? transpose : fft)++;
  CHECK(transpose == 24);
  CHECK(fft == 27);
}

TEST_CASE("empty scenario list gives an empty report") {
  Report r = run_matrix({});
  CHECK(r.rows.empty());
  CHECK(emit(r, EmitFormat::Csv).find("kernel,") == 0);
}

TEST_CASE("matrix rows fail independently") {
  std::vector<Scenario> scenarios = {
      {{KernelKind::Transpose, 32, 0}, MemArchitecture::multiport_4r1w(), 128,
       GenMode::Calibrated},  // over the 112 KB cap
      {{KernelKind::Transpose, 32, 0}, MemArchitecture::multiport_4r1w(), 64,
       GenMode::Calibrated},
  };
  Report r = run_matrix(scenarios);
  REQUIRE(r.rows.size() == 2);
  CHECK_FALSE(r.rows[0].ok);
  CHECK(r.rows[0].error.find("capacity") != std::string::npos);
  CHECK(r.rows[1].ok);
}

TEST_CASE("normalized performance: the slowest row of each group is 1.0") {
  Report r = run_matrix(default_matrix());
  std::map<std::string, int> at_one;
  std::map<std::string, double> max_norm;
  for (const ReportRow& row : r.rows) {
    REQUIRE(row.ok);
    REQUIRE(row.normalized_performance <= 1.0 + 1e-12);
    REQUIRE(row.normalized_performance > 0.0);
    std::string group = row.scenario.kernel.name();
    if (row.normalized_performance == 1.0) at_one[group]++;
    max_norm[group] = std::max(max_norm[group], row.normalized_performance);
  }
  for (auto& [group, count] : at_one) {
    CHECK(count >= 1);
    CHECK(max_norm[group] == 1.0);
  }
  // Groups whose times are all distinct have exactly one slowest row; some
  // transpose groups tie (the reference tables tie there too).
  CHECK(at_one["fft-r16"] == 1);
  CHECK(at_one["fft-r8"] == 1);
  CHECK(at_one["fft-r4"] == 1);
}

TEST_CASE("json emit round-trips") {
  std::vector<Scenario> scenarios = {
      {{KernelKind::Transpose, 32, 0}, MemArchitecture::multiport_4r1w(), 64,
       GenMode::Calibrated},
      {{KernelKind::Fft, 4096, 8},
       MemArchitecture::make_banked(8, BankMapping::bit_slice(2, 3)), 64,
       GenMode::Native},
      {{KernelKind::Transpose, 32, 0}, MemArchitecture::multiport_4r1w(), 9999,
       GenMode::Calibrated},  // error row survives the round trip
  };
  Report r = run_matrix(scenarios);
  std::string text = emit(r, EmitFormat::Json);
  Report parsed = parse_report_json(text);
  CHECK(emit(parsed, EmitFormat::Json) == text);
}

TEST_CASE("csv has one data line per scenario plus a header") {
  Report r = run_matrix(default_matrix());
  std::string csv = emit(r, EmitFormat::Csv);
  size_t lines = 0;
  for (char c : csv) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 52);  // header + 51 rows
}

TEST_CASE("comparison: calibrated multi-port transpose cells are exact") {
  auto scenarios = default_matrix();
  Report r = run_matrix(scenarios);
  Comparison cmp = compare_to_reference(r);
  CHECK(cmp.exact_total > 0);
  CHECK(cmp.exact_ok == cmp.exact_total);
  CHECK(cmp.approx_ok == cmp.approx_total);
  CHECK(cmp.unmatched.empty());
  for (const CellDelta& cell : cmp.cells) {
    if (cell.cls == DeltaClass::Exact && cell.field != "time_us")
      CHECK(cell.simulated == cell.reference);
    // Offset-mapped banked rows are never gated.
    if (cell.arch.find("offset") != std::string::npos)
      CHECK((cell.cls == DeltaClass::Informational ||
             cell.kernel.rfind("transpose", 0) != 0 ||
             cell.within));
  }
}

TEST_CASE("comparison classifies native-mode rows as informational") {
  std::vector<Scenario> scenarios = {{{KernelKind::Transpose, 32, 0},
                                      MemArchitecture::multiport_4r1w(), 64,
                                      GenMode::Native}};
  Comparison cmp = compare_to_reference(run_matrix(scenarios));
  REQUIRE(!cmp.cells.empty());
  for (const CellDelta& cell : cmp.cells)
    CHECK(cell.cls == DeltaClass::Informational);
}

TEST_CASE("table emit uses the documented fixed-width header") {
  Report r = run_matrix({{{KernelKind::Transpose, 32, 0},
                          MemArchitecture::multiport_4r1w(), 64, GenMode::Calibrated}});
  std::string table = emit(r, EmitFormat::Table);
  CHECK(table.rfind("kernel", 0) == 0);
  CHECK(table.find("load_cyc") != std::string::npos);
  CHECK(table.find("norm") != std::string::npos);
  CHECK_THROWS_AS(emit(r, EmitFormat(42)), std::invalid_argument);
}

TEST_CASE("comparison classifies offset transpose rows as informational") {
  std::vector<Scenario> scenarios = {
      {{KernelKind::Transpose, 32, 0},
       MemArchitecture::make_banked(16, BankMapping::bit_slice(2, 4)), 64,
       GenMode::Calibrated}};
  Comparison cmp = compare_to_reference(run_matrix(scenarios));
  REQUIRE(!cmp.cells.empty());
  for (const CellDelta& cell : cmp.cells)
    CHECK(cell.cls == DeltaClass::Informational);
}

TEST_CASE("comparison lists unmatched rows without failing") {
  std::vector<Scenario> scenarios = {
      {{KernelKind::Transpose, 32, 0},
       MemArchitecture::make_banked(16, BankMapping::bit_slice(5, 4)), 64,
       GenMode::Calibrated}};
  Comparison cmp = compare_to_reference(run_matrix(scenarios));
  REQUIRE(cmp.unmatched.size() == 1);
  CHECK(cmp.unmatched[0] == "transpose-32/banked16-offset5");
  CHECK(cmp.cells.empty());
}

TEST_CASE("footprint: banked constant, multi-port roofline") {
  auto b16 = MemArchitecture::make_banked(16, BankMapping::lsb(4));
  auto b8 = MemArchitecture::make_banked(8, BankMapping::lsb(3));
  auto b4 = MemArchitecture::make_banked(4, BankMapping::lsb(2));
  for (uint32_t kb : {64u, 112u, 168u, 224u, 448u}) {
    CHECK(footprint_estimate(b16, kb).memory_alm == 16640.0);
    CHECK(footprint_estimate(b8, kb).memory_alm == 8320.0);
    CHECK(footprint_estimate(b4, kb).memory_alm == 4160.0);
  }
  auto mp1 = MemArchitecture::multiport_4r1w();
  auto mp2 = MemArchitecture::multiport_4r2w();
  CHECK(footprint_estimate(mp1, 64).memory_alm == 831.0);
  CHECK(footprint_estimate(mp1, 32).memory_alm == 831.0);
  CHECK(footprint_estimate(mp1, 112).memory_alm == 16640.0);
  CHECK(footprint_estimate(mp2, 224).memory_alm == 16640.0);
  double prev = 831.0;
  for (uint32_t kb = 65; kb <= 112; ++kb) {
    double alm = footprint_estimate(mp1, kb).memory_alm;
    CHECK(alm > prev);
    prev = alm;
  }
  CHECK_THROWS_AS(footprint_estimate(mp1, 113), CapacityError);
  CHECK_THROWS_AS(footprint_estimate(MemArchitecture::multiport_4r1w_vb(), 113),
                  CapacityError);
  CHECK_THROWS_AS(footprint_estimate(mp2, 225), CapacityError);
  CHECK_THROWS_AS(footprint_estimate(b16, 449), CapacityError);
  CHECK(footprint_estimate(b16, 448).sectors == 1.0);
}

TEST_CASE("timing config overrides parse and validate") {
  TimingParams p;
  apply_config_text("# calibration\nper_instruction_overhead_read = 30\n"
                    "per_instruction_overhead_write = 8.5\n",
                    p);
  CHECK(p.per_instruction_overhead_read == 30.0);
  CHECK(p.per_instruction_overhead_write == 8.5);
  CHECK_THROWS_AS(apply_config_text("bogus_key = 1\n", p), std::invalid_argument);
  CHECK_THROWS_AS(apply_config_text("read_issue_latency\n", p), std::invalid_argument);
  CHECK_THROWS_AS(apply_config_text("bank_latency = x\n", p), std::invalid_argument);
}

TEST_CASE("arch slugs round-trip") {
  for (const auto& slug : {"4r1w", "4r2w", "4r1w-vb", "banked16", "banked16-offset2",
                           "banked8", "banked8-offset2", "banked4", "banked4-offset2"}) {
    auto arch = MemArchitecture::from_slug(slug);
    REQUIRE(arch.has_value());
    CHECK(arch->slug() == slug);
  }
  CHECK_FALSE(MemArchitecture::from_slug("banked5").has_value());
  CHECK_FALSE(MemArchitecture::from_slug("2r1w").has_value());
}
