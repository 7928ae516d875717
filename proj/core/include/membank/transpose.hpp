#pragma once

#include "membank/trace.hpp"

namespace membank {

enum class GenMode : uint8_t {
  Native,      // compute-op counts as generated
  Calibrated,  // compute-op counts overridden with the profiled reference counts
};

// N x N word matrix transpose, row-major layout starting at word 0. Each
// warp reads 16 consecutive row elements (unit stride) and writes the same
// values down the destination column (stride n), so every store operation
// lands in a single bank under an LSB mapping. Stores block the pipeline.
//
// Calibrated compute counts exist for n in {32, 64, 128}.
KernelTrace gen_transpose(uint32_t n, GenMode mode = GenMode::Native,
                          uint32_t threads = 256);

}  // namespace membank
