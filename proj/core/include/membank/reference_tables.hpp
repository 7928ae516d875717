#pragma once

#include <optional>
#include <span>
#include <string>

#include "membank/trace.hpp"

namespace membank {

// One cell block of the published profiling tables: the measured cycle
// counts, wall time and efficiencies for a (kernel, architecture) pair on
// the RTL implementation. Values are transcribed verbatim, including the
// table's own internal inconsistencies (see tests/test_report.cpp).
struct ReferenceRow {
  const char* kernel;  // "transpose-32", "fft-r16", ...
  const char* arch;    // canonical slug; offsets transcribed as shift 2
  CommonOpCounts common;
  uint64_t load_ops;
  uint64_t store_ops;
  uint64_t twiddle_ops;
  uint64_t load_cycles;
  uint64_t twiddle_cycles;  // 0 where the table has no twiddle row
  uint64_t store_cycles;
  uint64_t total_cycles;
  double time_us;
  std::optional<double> read_eff_pct;     // transpose "R Bank Eff." / fft "D Bank Eff."
  std::optional<double> write_eff_pct;    // transpose only
  std::optional<double> twiddle_eff_pct;  // fft only
  std::optional<double> compute_eff_pct;  // fft "Efficiency"
};

std::span<const ReferenceRow> reference_table();

const ReferenceRow* find_reference(const std::string& kernel, const std::string& arch);

}  // namespace membank
