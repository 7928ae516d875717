#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "membank/types.hpp"

namespace membank {

enum class OpCategory : uint8_t {
  FpOp,
  IntOp,
  ImmediateOp,
  OtherOp,
  Load,
  Store,
  TwiddleLoad,
};

inline bool is_memory_category(OpCategory c) {
  return c == OpCategory::Load || c == OpCategory::Store ||
         c == OpCategory::TwiddleLoad;
}

const char* category_name(OpCategory c);

// Per-lane register transform performed by a compute op. AddressCalc ops
// model address/loop arithmetic whose results are already baked into the
// trace addresses; they cost a cycle but touch no tracked register.
enum class ComputeKind : uint8_t {
  AddressCalc,
  ComplexMul,  // regs[a..a+1] *= regs[b..b+1] as (re, im)
  DftCombine,  // in-place radix-point DFT on regs[a .. a+2*radix-1]
};

// One warp-level operation: what the 16 lanes do in one issue slot.
struct WarpOp {
  OpCategory category = OpCategory::OtherOp;
  uint32_t instr_index = 0;
  uint8_t warp = 0;  // position within the instruction; lanes are threads warp*16..+15

  // Memory ops (Load / Store / TwiddleLoad).
  LaneRequestSet requests;
  uint8_t reg = 0;        // destination (loads) or source (stores)
  bool blocking = true;   // writes only

  // Compute ops.
  ComputeKind compute = ComputeKind::AddressCalc;
  uint8_t reg_a = 0;
  uint8_t reg_b = 0;
  uint8_t radix = 0;
  bool inverse = false;

  bool is_memory() const { return is_memory_category(category); }
};

// Warp-op counts for the four compute categories, one issue cycle each.
struct CommonOpCounts {
  uint64_t fp = 0;
  uint64_t int_ops = 0;
  uint64_t immediate = 0;
  uint64_t other = 0;

  uint64_t total() const { return fp + int_ops + immediate + other; }
};

enum class KernelKind : uint8_t { Transpose, Fft };

// Ordered warp-level operation stream for one benchmark kernel, grouped into
// instructions of threads/16 operations.
struct KernelTrace {
  std::vector<WarpOp> ops;
  uint32_t threads = 256;
  KernelKind kernel = KernelKind::Transpose;
  std::string name;
  uint32_t size = 0;    // matrix dimension n (transpose) or points (fft)
  uint32_t radix = 0;   // fft only
  bool inverse = false; // fft only
  uint32_t data_words = 0;
  uint32_t twiddle_base = 0;
  uint32_t twiddle_words = 0;
  uint32_t num_instructions = 0;

  // When set, timing uses these compute counts instead of the native ops
  // (profiled counts from the reference runs; the memory traffic is the
  // same either way).
  std::optional<CommonOpCounts> calibrated_common;

  uint32_t ops_per_instruction() const { return threads / kNumLanes; }
  uint32_t total_words() const { return twiddle_base + twiddle_words; }
};

struct TraceSummary {
  CommonOpCounts common;
  uint64_t load_ops = 0;
  uint64_t store_ops = 0;
  uint64_t twiddle_load_ops = 0;
};

// Per-category warp-op counts; compute categories reflect the calibrated
// override when the trace carries one.
TraceSummary trace_summary(const KernelTrace& trace);

// Incremental trace construction, one instruction at a time.
class TraceBuilder {
 public:
  explicit TraceBuilder(KernelTrace& trace) : trace_(trace) {}

  // Emits a compute instruction: one identical warp op per warp.
  void compute(OpCategory category, ComputeKind kind, uint8_t reg_a = 0,
               uint8_t reg_b = 0, uint8_t radix = 0, bool inverse = false);

  // Emits a memory instruction of one warp op per warp; addr(warp, lane)
  // supplies the word address of every request.
  template <typename AddrFn>
  void memory(OpCategory category, uint8_t reg, bool blocking, AddrFn&& addr) {
    uint32_t instr = trace_.num_instructions++;
    for (uint32_t w = 0; w < trace_.ops_per_instruction(); ++w) {
      WarpOp op;
      op.category = category;
      op.instr_index = instr;
      op.warp = uint8_t(w);
      op.reg = reg;
      op.blocking = blocking;
      for (uint32_t lane = 0; lane < kNumLanes; ++lane)
        op.requests.set(lane, addr(w, lane));
      trace_.ops.push_back(op);
    }
  }

 private:
  KernelTrace& trace_;
};

}  // namespace membank
