#pragma once

#include <cstdint>
#include <vector>

#include "membank/conflict.hpp"
#include "membank/types.hpp"

namespace membank {

inline constexpr int8_t kNoGrant = -1;

// Cycle-by-cycle crossbar controls for one memory operation.
//
// grants[t][bank] is the lane whose address is muxed into that bank on cycle
// t (input mux, one-hot in hardware), or kNoGrant. writebacks[t][lane] is the
// bank whose output is muxed back into that lane on cycle t (output mux); it
// equals the grant matrix delayed by the bank latency and transposed, so the
// writeback vector extends bank_latency cycles past the last grant.
struct AccessSchedule {
  std::vector<std::array<int8_t, 16>> grants;      // [cycle][bank] -> lane
  std::vector<std::array<int8_t, kNumLanes>> writebacks;  // [cycle][lane] -> bank
  uint32_t duration = 0;      // grant cycles; equals the operation's max_conflicts
  uint32_t bank_latency = 0;
  uint32_t num_banks = 0;

  // Writeback signal into each SP: the OR of the lane's output-mux column.
  uint16_t writeback_valid(uint32_t cycle) const {
    uint16_t v = 0;
    for (uint32_t lane = 0; lane < kNumLanes; ++lane)
      if (writebacks[cycle][lane] != kNoGrant) v |= uint16_t(1u << lane);
    return v;
  }
};

// Runs one carry-based arbiter per bank in lockstep until every pending
// vector drains. Per cycle each bank grants at most one lane and each lane
// is granted by at most one bank.
AccessSchedule build_schedule(const LaneRequestSet& requests,
                              const BankedConfig& config);

}  // namespace membank
