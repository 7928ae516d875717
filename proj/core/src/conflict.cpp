#include "membank/conflict.hpp"

#include <algorithm>
#include <bit>

namespace membank {

ConflictProfile conflict_profile(const LaneRequestSet& requests,
                                 const BankedConfig& config) {
  ConflictProfile p;
  p.per_bank_count.assign(config.num_banks, 0);
  for (uint32_t lane = 0; lane < kNumLanes; ++lane) {
    const LaneRequest& req = requests.lanes[lane];
    if (!req.active) continue;  // inactive lanes leave an all-zero row
    uint32_t bank = map_bank(req.address, config.mapping);
    p.bank_matrix[lane] = uint16_t(1u << bank);
    p.per_bank_count[bank]++;
  }
  p.max_conflicts = *std::max_element(p.per_bank_count.begin(), p.per_bank_count.end());
  return p;
}

}  // namespace membank
