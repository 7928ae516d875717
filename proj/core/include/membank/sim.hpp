#pragma once

#include <optional>
#include <string>

#include "membank/arch.hpp"
#include "membank/timing.hpp"
#include "membank/trace.hpp"

namespace membank {

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Everything a benchmark run reports: the per-category cycle breakdown, the
// wall time at the architecture's clock, the bank efficiencies (banked
// memories only) and a digest of the final memory image.
struct SimMetrics {
  std::string kernel;
  std::string arch;

  uint64_t fp_cycles = 0;
  uint64_t int_cycles = 0;
  uint64_t immediate_cycles = 0;
  uint64_t other_cycles = 0;
  uint64_t load_cycles = 0;
  uint64_t twiddle_load_cycles = 0;
  uint64_t store_cycles = 0;
  uint64_t overlap_credit = 0;  // non-blocking write cycles hidden under compute
  uint64_t total_cycles = 0;

  uint64_t load_ops = 0;
  uint64_t store_ops = 0;
  uint64_t twiddle_load_ops = 0;

  double time_us = 0.0;
  std::optional<double> read_bank_efficiency;
  std::optional<double> write_bank_efficiency;
  std::optional<double> twiddle_bank_efficiency;
  std::optional<double> compute_efficiency_pct;
  std::string functional_checksum;

  uint64_t common_cycles() const {
    return fp_cycles + int_cycles + immediate_cycles + other_cycles;
  }
};

// Ideal-ops-to-actual-cycles ratio for one memory direction, as a percentage.
double bank_efficiency(uint64_t num_ops, uint64_t cycles);

// Share of the run the core spends on floating point work.
double compute_efficiency(uint64_t fp_cycles, uint64_t total_cycles);

// Walks the trace against one memory architecture: functional execution of
// the shared-memory image plus cycle accounting per instruction. mem_kb
// bounds the shared memory and is checked against the architecture's
// capacity ceiling.
SimMetrics run(const KernelTrace& trace, const MemArchitecture& arch,
               const TimingParams& params, uint32_t mem_kb = 64);

}  // namespace membank
