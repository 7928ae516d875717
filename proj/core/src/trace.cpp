#include "membank/trace.hpp"

namespace membank {

const char* category_name(OpCategory c) {
  switch (c) {
    case OpCategory::FpOp: return "fp";
    case OpCategory::IntOp: return "int";
    case OpCategory::ImmediateOp: return "immediate";
    case OpCategory::OtherOp: return "other";
    case OpCategory::Load: return "load";
    case OpCategory::Store: return "store";
    case OpCategory::TwiddleLoad: return "twiddle_load";
  }
  return "?";
}

TraceSummary trace_summary(const KernelTrace& trace) {
  TraceSummary s;
  for (const WarpOp& op : trace.ops) {
    switch (op.category) {
      case OpCategory::FpOp: s.common.fp++; break;
      case OpCategory::IntOp: s.common.int_ops++; break;
      case OpCategory::ImmediateOp: s.common.immediate++; break;
      case OpCategory::OtherOp: s.common.other++; break;
      case OpCategory::Load: s.load_ops++; break;
      case OpCategory::Store: s.store_ops++; break;
      case OpCategory::TwiddleLoad: s.twiddle_load_ops++; break;
    }
  }
  if (trace.calibrated_common) s.common = *trace.calibrated_common;
  return s;
}

void TraceBuilder::compute(OpCategory category, ComputeKind kind, uint8_t reg_a,
                           uint8_t reg_b, uint8_t radix, bool inverse) {
  uint32_t instr = trace_.num_instructions++;
  for (uint32_t w = 0; w < trace_.ops_per_instruction(); ++w) {
    WarpOp op;
    op.category = category;
    op.instr_index = instr;
    op.warp = uint8_t(w);
    op.compute = kind;
    op.reg_a = reg_a;
    op.reg_b = reg_b;
    op.radix = radix;
    op.inverse = inverse;
    trace_.ops.push_back(op);
  }
}

}  // namespace membank
