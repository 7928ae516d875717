#pragma once

#include <string>
#include <vector>

#include "membank/footprint.hpp"
#include "membank/sim.hpp"
#include "membank/transpose.hpp"

namespace membank {

struct KernelSpec {
  KernelKind kind = KernelKind::Transpose;
  uint32_t size = 32;    // matrix dimension, or FFT points
  uint32_t radix = 16;   // FFT only

  std::string name() const {
    return kind == KernelKind::Transpose ? "transpose-" + std::to_string(size)
                                         : "fft-r" + std::to_string(radix);
  }
};

struct Scenario {
  KernelSpec kernel;
  MemArchitecture arch;
  uint32_t mem_kb = 64;
  GenMode mode = GenMode::Calibrated;
};

struct ReportRow {
  Scenario scenario;
  bool ok = false;
  std::string error;
  SimMetrics metrics;                 // valid when ok
  FootprintEstimate footprint;        // valid when ok
  double normalized_performance = 0;  // slowest scenario of the group = 1.0
};

struct Report {
  std::vector<ReportRow> rows;
};

// The 51 profiled combinations: 3 transpose sizes over 8 architectures plus
// 3 FFT radices over 9.
std::vector<Scenario> default_matrix(GenMode mode = GenMode::Calibrated,
                                     uint32_t mem_kb = 64);

// Evaluates every scenario; failures are recorded per row and do not abort
// the matrix. Rows keep the scenario order.
Report run_matrix(const std::vector<Scenario>& scenarios,
                  const TimingParams& params = {});

enum class DeltaClass : uint8_t {
  Exact,          // must match the reference (0.01 us slack on times)
  Approx,         // within 3% (1 pp for efficiencies)
  Informational,  // reported only; reference kernel not reproducible
};

struct CellDelta {
  std::string kernel;
  std::string arch;
  std::string field;
  double simulated = 0;
  double reference = 0;
  DeltaClass cls = DeltaClass::Informational;
  bool within = true;
};

struct Comparison {
  std::vector<CellDelta> cells;
  std::vector<std::string> unmatched;  // rows with no reference entry
  size_t exact_total = 0, exact_ok = 0;
  size_t approx_total = 0, approx_ok = 0;
  size_t info_total = 0;
};

Comparison compare_to_reference(const Report& report);

enum class EmitFormat : uint8_t { Table, Csv, Json };

std::string emit(const Report& report, EmitFormat format);
std::string emit_comparison(const Comparison& cmp, EmitFormat format);

// Report plus its reference comparison as one artifact: a single JSON
// document with a "comparison" object, or the two text tables in sequence.
std::string emit_with_comparison(const Report& report, const Comparison& cmp,
                                 EmitFormat format);

// Parses a JSON report back into metric rows; emit(Json) then parse is the
// identity on the reported fields.
Report parse_report_json(const std::string& text);

}  // namespace membank
