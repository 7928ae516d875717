#pragma once

#include <vector>

#include "membank/types.hpp"

namespace membank {

// Bank-conflict census of one operation. Each active lane's bank index is
// converted to a one-hot row of a lanes x banks matrix; the column
// population counts give the accesses into each bank, and the column
// maximum is the number of clocks the operation occupies the memory.
struct ConflictProfile {
  std::vector<uint32_t> per_bank_count;        // indexed by bank
  uint32_t max_conflicts = 0;                  // 0 when no lane is active
  std::array<uint16_t, kNumLanes> bank_matrix{};  // row per lane, bit b = bank b

  // Column b of the matrix as a 16-bit lane vector (bit i = lane i).
  uint16_t bank_column(uint32_t bank) const {
    uint16_t col = 0;
    for (uint32_t lane = 0; lane < kNumLanes; ++lane)
      if (bank_matrix[lane] & (1u << bank)) col |= uint16_t(1u << lane);
    return col;
  }
};

ConflictProfile conflict_profile(const LaneRequestSet& requests,
                                 const BankedConfig& config);

}  // namespace membank
