#pragma once

#include "membank/arch.hpp"

namespace membank {

// Footprint is measured in ALM-equivalents with the memory node-locked to
// sectors of 16640 ALMs. A banked memory always owns whole sectors (one for
// 16 banks, 1/2 for 8, 1/4 for 4) regardless of size; a multi-port memory is
// under 1K ALMs up to 64 KB and grows linearly in pipelining cost until it
// fills a sector at its capacity ceiling.
inline constexpr double kSectorAlms = 16640.0;
inline constexpr double kMultiportBaseAlms = 831.0;   // R/W control + memory logic
inline constexpr double kCoreCommonAlms = 7113.0;     // 16 SPs + fetch/decode
inline constexpr uint32_t kMultiportFreeKb = 64;      // no extra pipelining below this

struct FootprintEstimate {
  double memory_alm = 0.0;     // the shared-memory footprint itself
  double with_core_alm = 0.0;  // plus access controllers, SPs, fetch/decode
  double sectors = 0.0;        // memory_alm in sector equivalents
};

// Throws CapacityError when mem_kb is beyond what the architecture supports.
FootprintEstimate footprint_estimate(const MemArchitecture& arch, uint32_t mem_kb);

}  // namespace membank
