#include "membank/transpose.hpp"

#include <stdexcept>

namespace membank {

namespace {

CommonOpCounts calibrated_transpose_common(uint32_t n) {
  switch (n) {
    case 32: return {0, 256, 129, 6};
    case 64: return {0, 192, 161, 6};
    case 128: return {0, 160, 129, 6};
    default:
      throw std::invalid_argument(
          "calibrated transpose counts exist only for n in {32, 64, 128}");
  }
}

}  // namespace

KernelTrace gen_transpose(uint32_t n, GenMode mode, uint32_t threads) {
  if (n == 0 || n % kNumLanes != 0)
    throw std::invalid_argument("transpose dimension must be a positive multiple of 16");
  if (threads != 256)
    throw std::invalid_argument("transpose kernel is written for 256 threads");

  KernelTrace trace;
  trace.threads = threads;
  trace.kernel = KernelKind::Transpose;
  trace.name = "transpose-" + std::to_string(n);
  trace.size = n;
  trace.data_words = n * n;
  trace.twiddle_base = n * n;
  if (mode == GenMode::Calibrated)
    trace.calibrated_common = calibrated_transpose_common(n);

  TraceBuilder b(trace);
  uint32_t tiles = n / 16;  // 16x16 tiles; one tile is one 256-thread instruction

  // In-place tile-pair swap: load tile (u,v) and its mirror by rows, write
  // both back transposed down the destination columns. Thread (w, lane) owns
  // element (row w, column lane) of its tile.
  auto load_tile = [&](uint32_t u, uint32_t v, uint8_t reg) {
    b.memory(OpCategory::Load, reg, true, [&](uint32_t w, uint32_t lane) {
      return (u * 16 + w) * n + v * 16 + lane;
    });
  };
  auto store_transposed = [&](uint32_t u, uint32_t v, uint8_t reg) {
    // Data loaded from tile (u,v) lands in tile (v,u), column-wise.
    b.memory(OpCategory::Store, reg, true, [&](uint32_t w, uint32_t lane) {
      return (v * 16 + lane) * n + u * 16 + w;
    });
  };

  b.compute(OpCategory::ImmediateOp, ComputeKind::AddressCalc);
  b.compute(OpCategory::ImmediateOp, ComputeKind::AddressCalc);
  for (uint32_t u = 0; u < tiles; ++u) {
    b.compute(OpCategory::IntOp, ComputeKind::AddressCalc);
    load_tile(u, u, 0);
    store_transposed(u, u, 0);
    for (uint32_t v = u + 1; v < tiles; ++v) {
      b.compute(OpCategory::IntOp, ComputeKind::AddressCalc);
      load_tile(u, v, 0);
      load_tile(v, u, 1);
      b.compute(OpCategory::IntOp, ComputeKind::AddressCalc);
      store_transposed(u, v, 0);
      store_transposed(v, u, 1);
    }
  }
  return trace;
}

}  // namespace membank
