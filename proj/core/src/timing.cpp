#include "membank/timing.hpp"

#include <cmath>
#include <stdexcept>

#include "membank/conflict.hpp"

namespace membank {

namespace {

uint64_t conflict_sum(std::span<const LaneRequestSet> operations,
                      const BankedConfig& config) {
  uint64_t sum = 0;
  for (const auto& op : operations)
    sum += conflict_profile(op, config).max_conflicts;
  return sum;
}

uint64_t instruction_count(size_t num_ops, uint32_t ops_per_instruction) {
  return (num_ops + ops_per_instruction - 1) / ops_per_instruction;
}

}  // namespace

uint64_t banked_stream_cycles(uint64_t conflicts, uint64_t num_instructions,
                              double per_instruction_overhead) {
  return conflicts + uint64_t(std::llround(double(num_instructions) *
                                           per_instruction_overhead));
}

uint64_t banked_read_cycles(std::span<const LaneRequestSet> operations,
                            const BankedConfig& config, const TimingParams& params) {
  if (operations.empty())
    throw std::invalid_argument("banked_read_cycles: empty operation list");
  params.validate();
  return banked_stream_cycles(conflict_sum(operations, config),
                              instruction_count(operations.size(), params.ops_per_instruction),
                              params.per_instruction_overhead_read);
}

uint64_t banked_write_cycles(std::span<const LaneRequestSet> operations,
                             const BankedConfig& config, const TimingParams& params,
                             bool /*blocking*/) {
  if (operations.empty())
    throw std::invalid_argument("banked_write_cycles: empty operation list");
  params.validate();
  // Blocking vs non-blocking changes pipeline release, not memory occupancy.
  return banked_stream_cycles(conflict_sum(operations, config),
                              instruction_count(operations.size(), params.ops_per_instruction),
                              params.per_instruction_overhead_write);
}

uint64_t multiport_cycles(uint64_t num_operations, uint32_t ports) {
  if (ports != 1 && ports != 2 && ports != 4)
    throw std::invalid_argument("multiport_cycles: port count must be 1, 2 or 4");
  return num_operations * (kNumLanes / ports);
}

uint64_t vb_write_cycles(std::span<const LaneRequestSet> operations,
                         const BankMapping& vb_mapping, const TimingParams& params) {
  if (operations.empty())
    throw std::invalid_argument("vb_write_cycles: empty operation list");
  if (vb_mapping.width != 2)
    throw std::invalid_argument("vb_write_cycles: VB mapping selects 4 sub-memories");
  params.validate();
  BankedConfig sub = BankedConfig::make(4, vb_mapping);
  return banked_stream_cycles(conflict_sum(operations, sub),
                              instruction_count(operations.size(), params.ops_per_instruction),
                              params.per_instruction_overhead_write);
}

double cycles_to_microseconds(uint64_t cycles, double clock_mhz) {
  if (clock_mhz <= 0) throw std::invalid_argument("clock must be positive");
  return double(cycles) / clock_mhz;
}

}  // namespace membank
