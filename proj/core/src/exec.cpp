#include "membank/exec.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace membank {

namespace {

inline constexpr uint32_t kNumRegisters = 32;

struct ThreadState {
  std::array<float, kNumRegisters> regs{};
  uint32_t written = 0;  // bit per register
};

struct Machine {
  std::vector<ThreadState> threads;
  SharedMemoryImage* mem;
  size_t op_index = 0;

  void require_reg(uint8_t r) const {
    if (r >= kNumRegisters)
      throw ExecError(op_index, "register index " + std::to_string(r) +
                                    " out of range");
  }

  float read_reg(ThreadState& t, uint8_t r) const {
    require_reg(r);
    if (!(t.written & (1u << r)))
      throw ExecError(op_index, "read of never-written register " + std::to_string(r));
    return t.regs[r];
  }

  void write_reg(ThreadState& t, uint8_t r, float v) const {
    require_reg(r);
    t.regs[r] = v;
    t.written |= 1u << r;
  }

  uint32_t checked_addr(uint32_t addr) const {
    if (addr >= mem->words.size())
      throw ExecError(op_index, "address " + std::to_string(addr) +
                                    " outside shared memory");
    return addr;
  }
};

void run_compute(Machine& m, const WarpOp& op) {
  for (uint32_t lane = 0; lane < kNumLanes; ++lane) {
    ThreadState& t = m.threads[op.warp * kNumLanes + lane];
    switch (op.compute) {
      case ComputeKind::AddressCalc:
        break;  // address arithmetic is already folded into the trace
      case ComputeKind::ComplexMul: {
        float ar = m.read_reg(t, op.reg_a), ai = m.read_reg(t, uint8_t(op.reg_a + 1));
        float br = m.read_reg(t, op.reg_b), bi = m.read_reg(t, uint8_t(op.reg_b + 1));
        m.write_reg(t, op.reg_a, ar * br - ai * bi);
        m.write_reg(t, uint8_t(op.reg_a + 1), ar * bi + ai * br);
        break;
      }
      case ComputeKind::DftCombine: {
        uint32_t r = op.radix;
        double sign = op.inverse ? 1.0 : -1.0;
        std::array<double, 2 * kNumLanes> in;
        for (uint32_t k = 0; k < r; ++k) {
          in[2 * k] = m.read_reg(t, uint8_t(op.reg_a + 2 * k));
          in[2 * k + 1] = m.read_reg(t, uint8_t(op.reg_a + 2 * k + 1));
        }
        for (uint32_t out = 0; out < r; ++out) {
          double re = 0, im = 0;
          for (uint32_t k = 0; k < r; ++k) {
            double angle =
                sign * 2.0 * std::numbers::pi * double((out * k) % r) / double(r);
            double c = std::cos(angle), s = std::sin(angle);
            re += in[2 * k] * c - in[2 * k + 1] * s;
            im += in[2 * k] * s + in[2 * k + 1] * c;
          }
          m.write_reg(t, uint8_t(op.reg_a + 2 * out), float(re));
          m.write_reg(t, uint8_t(op.reg_a + 2 * out + 1), float(im));
        }
        break;
      }
    }
  }
}

}  // namespace

SharedMemoryImage execute_functional(const KernelTrace& trace,
                                     SharedMemoryImage memory) {
  Machine m;
  m.threads.resize(trace.threads);
  m.mem = &memory;

  for (size_t i = 0; i < trace.ops.size(); ++i) {
    m.op_index = i;
    const WarpOp& op = trace.ops[i];
    switch (op.category) {
      case OpCategory::Load:
      case OpCategory::TwiddleLoad:
        for (uint32_t lane = 0; lane < kNumLanes; ++lane) {
          const LaneRequest& req = op.requests.lanes[lane];
          if (!req.active) continue;
          ThreadState& t = m.threads[op.warp * kNumLanes + lane];
          m.write_reg(t, op.reg,
                      std::bit_cast<float>(memory.words[m.checked_addr(req.address)]));
        }
        break;
      case OpCategory::Store:
        for (uint32_t lane = 0; lane < kNumLanes; ++lane) {
          const LaneRequest& req = op.requests.lanes[lane];
          if (!req.active) continue;
          ThreadState& t = m.threads[op.warp * kNumLanes + lane];
          memory.words[m.checked_addr(req.address)] =
              std::bit_cast<uint32_t>(m.read_reg(t, op.reg));
        }
        break;
      default:
        run_compute(m, op);
        break;
    }
  }
  return memory;
}

}  // namespace membank
