#pragma once

#include <cstdint>
#include <span>

#include "membank/types.hpp"

namespace membank {

// Controller timing constants. The per-instruction overheads are calibration
// constants fitted to the profiled reference runs: a read instruction costs
// 26 cycles beyond its conflict sum (the 5-cycle issue pipeline, the 3-cycle
// bank latency, and the remaining control drain), a write instruction 7.5.
// Both are exposed so the model can be re-fitted.
struct TimingParams {
  uint32_t read_issue_latency = 5;  // sort-network fill before the first issue
  uint32_t bank_latency = 3;
  double per_instruction_overhead_read = 26.0;
  double per_instruction_overhead_write = 7.5;
  uint32_t multiport_read_ports = 4;
  uint32_t multiport_write_ports_1w = 1;
  uint32_t multiport_write_ports_2w = 2;
  uint32_t ops_per_instruction = 16;  // threads / 16

  void validate() const {
    if (per_instruction_overhead_read < 0 || per_instruction_overhead_write < 0)
      throw std::invalid_argument("negative overhead");
    if (double(read_issue_latency + bank_latency) > per_instruction_overhead_read)
      throw std::invalid_argument(
          "read overhead must cover issue latency plus bank latency");
    if (ops_per_instruction == 0)
      throw std::invalid_argument("ops_per_instruction must be positive");
  }
};

// Cycles for a stream of read operations against a banked memory: operations
// issue back to back, spaced by the clocks needed to resolve each one's bank
// conflicts, plus the per-instruction overhead.
uint64_t banked_read_cycles(std::span<const LaneRequestSet> operations,
                            const BankedConfig& config, const TimingParams& params);

// Same shape for writes. Blocking and non-blocking writes occupy the memory
// identically; a non-blocking write only differs in releasing the instruction
// pipeline after issue, which the simulator credits against following
// compute.
uint64_t banked_write_cycles(std::span<const LaneRequestSet> operations,
                             const BankedConfig& config, const TimingParams& params,
                             bool blocking = true);

// Multi-port memories serialize each 16-request operation over the port
// count; access time is deterministic and has no overhead terms.
uint64_t multiport_cycles(uint64_t num_operations, uint32_t ports);

// 4R-1W-VB write mode: the replicated memory acts as 4 separate sub-memories
// selected by vb_mapping (width 2), arbitrated like a 4-bank write.
uint64_t vb_write_cycles(std::span<const LaneRequestSet> operations,
                         const BankMapping& vb_mapping, const TimingParams& params);

double cycles_to_microseconds(uint64_t cycles, double clock_mhz);

// Cycle total for a group of operations forming `num_instructions`
// instructions of one memory direction.
uint64_t banked_stream_cycles(uint64_t conflict_sum, uint64_t num_instructions,
                              double per_instruction_overhead);

}  // namespace membank
