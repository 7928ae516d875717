#include "membank/sim.hpp"

#include <cmath>

#include "membank/conflict.hpp"
#include "membank/exec.hpp"

namespace membank {

double bank_efficiency(uint64_t num_ops, uint64_t cycles) {
  if (cycles == 0) throw std::invalid_argument("bank_efficiency: zero cycles");
  return 100.0 * double(num_ops) / double(cycles);
}

double compute_efficiency(uint64_t fp_cycles, uint64_t total_cycles) {
  if (total_cycles == 0)
    throw std::invalid_argument("compute_efficiency: zero total cycles");
  return 100.0 * double(fp_cycles) / double(total_cycles);
}

namespace {

struct InstrInfo {
  OpCategory category;
  uint64_t op_count = 0;
  uint64_t conflicts = 0;  // banked / VB only
  bool blocking = true;
  uint64_t mem_cycles = 0;  // per-instruction memory occupancy (overlap cap)
};

}  // namespace

SimMetrics run(const KernelTrace& trace, const MemArchitecture& arch,
               const TimingParams& params, uint32_t mem_kb) {
  arch.validate();
  params.validate();
  if (trace.ops.empty()) throw std::invalid_argument("run: empty trace");
  if (mem_kb > arch.capacity_kb())
    throw CapacityError(arch.display_name() + " capacity exceeded: " +
                        std::to_string(mem_kb) + " KB > " +
                        std::to_string(arch.capacity_kb()) + " KB");
  uint32_t mem_words = mem_kb * 256;
  if (trace.total_words() > mem_words)
    throw CapacityError("kernel footprint of " + std::to_string(trace.total_words()) +
                        " words exceeds the " + std::to_string(mem_kb) +
                        " KB shared memory");

  // The shared memory is banked for timing purposes only; contents are
  // identical across architectures.
  BankedConfig banked_cfg, vb_cfg;
  if (arch.is_banked())
    banked_cfg = BankedConfig::make(arch.banked->num_banks, arch.banked->mapping,
                                    mem_words);
  if (arch.kind == ArchKind::MultiPort4R1W_VB)
    vb_cfg = BankedConfig::make(4, arch.vb_mapping, mem_words);

  // Collapse the trace into instruction records.
  std::vector<InstrInfo> instrs;
  instrs.reserve(trace.num_instructions);
  uint32_t last_index = UINT32_MAX;
  for (const WarpOp& op : trace.ops) {
    if (instrs.empty() || op.instr_index != last_index) {
      last_index = op.instr_index;
      InstrInfo info;
      info.category = op.category;
      info.blocking = op.blocking;
      instrs.push_back(info);
    }
    InstrInfo& info = instrs.back();
    info.op_count++;
    if (op.is_memory() && arch.is_banked())
      info.conflicts += conflict_profile(op.requests, banked_cfg).max_conflicts;
    if (op.category == OpCategory::Store && arch.kind == ArchKind::MultiPort4R1W_VB)
      info.conflicts += conflict_profile(op.requests, vb_cfg).max_conflicts;
  }

  SimMetrics m;
  m.kernel = trace.name;
  m.arch = arch.slug();

  uint64_t load_conflicts = 0, tw_conflicts = 0, store_conflicts = 0;
  uint64_t load_instrs = 0, tw_instrs = 0, store_instrs = 0;
  CommonOpCounts native;

  for (InstrInfo& info : instrs) {
    switch (info.category) {
      case OpCategory::FpOp: native.fp += info.op_count; break;
      case OpCategory::IntOp: native.int_ops += info.op_count; break;
      case OpCategory::ImmediateOp: native.immediate += info.op_count; break;
      case OpCategory::OtherOp: native.other += info.op_count; break;
      case OpCategory::Load:
      case OpCategory::TwiddleLoad: {
        bool tw = info.category == OpCategory::TwiddleLoad;
        (tw ? tw_instrs : load_instrs)++;
        (tw ? m.twiddle_load_ops : m.load_ops) += info.op_count;
        if (arch.is_banked()) {
          (tw ? tw_conflicts : load_conflicts) += info.conflicts;
          info.mem_cycles = info.conflicts +
                            uint64_t(std::llround(params.per_instruction_overhead_read));
        } else {
          info.mem_cycles = multiport_cycles(info.op_count, params.multiport_read_ports);
        }
        break;
      }
      case OpCategory::Store: {
        store_instrs++;
        m.store_ops += info.op_count;
        switch (arch.kind) {
          case ArchKind::MultiPort4R1W:
            info.mem_cycles =
                multiport_cycles(info.op_count, params.multiport_write_ports_1w);
            break;
          case ArchKind::MultiPort4R2W:
            info.mem_cycles =
                multiport_cycles(info.op_count, params.multiport_write_ports_2w);
            break;
          case ArchKind::MultiPort4R1W_VB:
          case ArchKind::Banked:
            store_conflicts += info.conflicts;
            info.mem_cycles = info.conflicts +
                              uint64_t(std::llround(params.per_instruction_overhead_write));
            break;
        }
        break;
      }
    }
  }

  // Direction totals. Banked overheads accumulate exactly per instruction
  // count so fractional calibration constants stay exact in the sum.
  if (arch.is_banked()) {
    m.load_cycles = banked_stream_cycles(load_conflicts, load_instrs,
                                         params.per_instruction_overhead_read);
    m.twiddle_load_cycles = banked_stream_cycles(tw_conflicts, tw_instrs,
                                                 params.per_instruction_overhead_read);
    m.store_cycles = banked_stream_cycles(store_conflicts, store_instrs,
                                          params.per_instruction_overhead_write);
  } else {
    m.load_cycles = multiport_cycles(m.load_ops, params.multiport_read_ports);
    m.twiddle_load_cycles =
        multiport_cycles(m.twiddle_load_ops, params.multiport_read_ports);
    if (arch.kind == ArchKind::MultiPort4R1W_VB)
      m.store_cycles = banked_stream_cycles(store_conflicts, store_instrs,
                                            params.per_instruction_overhead_write);
    else
      m.store_cycles = multiport_cycles(
          m.store_ops, arch.kind == ArchKind::MultiPort4R2W
                           ? params.multiport_write_ports_2w
                           : params.multiport_write_ports_1w);
  }

  // A non-blocking write releases the pipeline after issue: compute up to the
  // next memory instruction runs under the write's memory occupancy.
  for (size_t i = 0; i < instrs.size(); ++i) {
    if (instrs[i].category != OpCategory::Store || instrs[i].blocking) continue;
    uint64_t compute = 0;
    for (size_t j = i + 1; j < instrs.size() && !is_memory_category(instrs[j].category);
         ++j)
      compute += instrs[j].op_count;
    m.overlap_credit += std::min(instrs[i].mem_cycles, compute);
  }

  CommonOpCounts common = trace.calibrated_common.value_or(native);
  m.fp_cycles = common.fp;
  m.int_cycles = common.int_ops;
  m.immediate_cycles = common.immediate;
  m.other_cycles = common.other;
  m.total_cycles = m.common_cycles() + m.load_cycles + m.twiddle_load_cycles +
                   m.store_cycles - m.overlap_credit;
  m.time_us = cycles_to_microseconds(m.total_cycles, arch.clock_mhz);

  if (arch.is_banked()) {
    if (m.load_cycles) m.read_bank_efficiency = bank_efficiency(m.load_ops, m.load_cycles);
    if (m.store_cycles)
      m.write_bank_efficiency = bank_efficiency(m.store_ops, m.store_cycles);
    if (m.twiddle_load_cycles)
      m.twiddle_bank_efficiency =
          bank_efficiency(m.twiddle_load_ops, m.twiddle_load_cycles);
  }
  if (m.fp_cycles) m.compute_efficiency_pct = compute_efficiency(m.fp_cycles, m.total_cycles);

  SharedMemoryImage final_image =
      execute_functional(trace, build_initial_image(trace, mem_words));
  m.functional_checksum = image_checksum(final_image);
  return m;
}

}  // namespace membank
