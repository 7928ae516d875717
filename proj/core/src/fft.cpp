#include "membank/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace membank {

namespace {

// Index with its base-R digit string reversed, over `digits` digits.
uint32_t digit_reverse(uint32_t i, uint32_t radix, uint32_t digits) {
  uint32_t r = 0;
  for (uint32_t d = 0; d < digits; ++d) {
    r = r * radix + (i % radix);
    i /= radix;
  }
  return r;
}

CommonOpCounts calibrated_fft_common(uint32_t radix, uint32_t points) {
  if (points != 4096)
    throw std::invalid_argument("calibrated FFT counts exist only for 4096 points");
  switch (radix) {
    case 4: return {13440, 2880, 1287, 244};
    case 8: return {11840, 3456, 523, 108};
    case 16: return {12384, 2192, 276, 90};
    default: break;
  }
  throw std::invalid_argument("calibrated FFT counts exist only for radix 4/8/16");
}

}  // namespace

FftPlan FftPlan::make(uint32_t radix, uint32_t points) {
  if (radix != 4 && radix != 8 && radix != 16)
    throw std::invalid_argument("radix must be 4, 8 or 16");
  uint32_t stages = 0;
  uint64_t p = 1;
  while (p < points) {
    p *= radix;
    stages++;
  }
  if (p != points || stages == 0)
    throw std::invalid_argument("points must be a positive power of the radix");
  return {radix, points, stages};
}

uint32_t FftPlan::stage_twiddles(uint32_t stage) const {
  if (stage == 0) return 0;
  uint32_t p = 1;  // radix^stage
  for (uint32_t s = 0; s < stage; ++s) p *= radix;
  return p * (radix - 1);
}

uint32_t FftPlan::stage_twiddle_base(uint32_t stage) const {
  uint32_t base = 0;
  for (uint32_t s = 1; s < stage; ++s) base += stage_twiddles(s);
  return base;
}

uint32_t FftPlan::total_twiddles() const {
  return stage_twiddle_base(stages - 1) + stage_twiddles(stages - 1);
}

std::pair<float, float> twiddle_value(uint32_t exponent, uint32_t modulus,
                                      bool inverse) {
  double sign = inverse ? 1.0 : -1.0;
  double angle = sign * 2.0 * std::numbers::pi * double(exponent % modulus) /
                 double(modulus);
  return {float(std::cos(angle)), float(std::sin(angle))};
}

void write_twiddle_table(SharedMemoryImage& image, uint32_t radix, uint32_t points,
                         bool inverse) {
  FftPlan plan = FftPlan::make(radix, points);
  for (uint32_t s = 1; s < plan.stages; ++s) {
    uint32_t span = 1;  // R^s: butterflies sharing a block at this stage
    for (uint32_t u = 0; u < s; ++u) span *= radix;
    uint32_t sub_fft = span * radix;  // L
    uint32_t base = plan.stage_twiddle_base(s);
    for (uint32_t j = 0; j < span; ++j) {
      for (uint32_t k = 1; k < radix; ++k) {
        auto [re, im] = twiddle_value(uint32_t((uint64_t(j) * k) % sub_fft), sub_fft,
                                      inverse);
        uint32_t idx = base + j * (radix - 1) + (k - 1);
        image.store_f32(image.twiddle_base + 2 * idx, re);
        image.store_f32(image.twiddle_base + 2 * idx + 1, im);
      }
    }
  }
}

KernelTrace gen_fft(uint32_t radix, uint32_t points, GenMode mode, bool inverse,
                    uint32_t threads) {
  FftPlan plan = FftPlan::make(radix, points);
  if (threads == 0 || threads % kNumLanes != 0)
    throw std::invalid_argument("thread count must be a multiple of 16");
  uint32_t butterflies = points / radix;
  if (butterflies % threads != 0)
    throw std::invalid_argument("butterflies per stage must fill whole instructions");
  uint32_t sub_iters = butterflies / threads;
  if (sub_iters * 2 * radix > 32)
    throw std::invalid_argument("first-stage working set exceeds the register file");

  KernelTrace trace;
  trace.threads = threads;
  trace.kernel = KernelKind::Fft;
  trace.name = "fft-r" + std::to_string(radix);
  trace.size = points;
  trace.radix = radix;
  trace.inverse = inverse;
  trace.data_words = 2 * points;
  trace.twiddle_base = 2 * points;
  trace.twiddle_words = 2 * plan.total_twiddles();
  if (mode == GenMode::Calibrated)
    trace.calibrated_common = calibrated_fft_common(radix, points);

  TraceBuilder b(trace);
  uint8_t R = uint8_t(radix);

  // Stage 0: trivial twiddles; the input permutation is folded into the load
  // addresses, so all of the stage's loads are issued before any store.
  // Thread t keeps its sub_iters butterflies resident (exactly 32 registers).
  b.compute(OpCategory::ImmediateOp, ComputeKind::AddressCalc);
  for (uint32_t q = 0; q < sub_iters; ++q) {
    b.compute(OpCategory::IntOp, ComputeKind::AddressCalc);
    for (uint32_t k = 0; k < radix; ++k) {
      for (uint32_t c = 0; c < 2; ++c) {
        b.memory(OpCategory::Load, uint8_t(q * 2 * radix + 2 * k + c), true,
                 [&](uint32_t w, uint32_t lane) {
                   uint32_t bf = q * threads + w * kNumLanes + lane;
                   uint32_t src = digit_reverse(bf * radix + k, radix, plan.stages);
                   return 2 * src + c;
                 });
      }
    }
  }
  for (uint32_t q = 0; q < sub_iters; ++q)
    b.compute(OpCategory::FpOp, ComputeKind::DftCombine, uint8_t(q * 2 * radix), 0, R,
              inverse);
  for (uint32_t q = 0; q < sub_iters; ++q) {
    b.compute(OpCategory::IntOp, ComputeKind::AddressCalc);
    for (uint32_t k = 0; k < radix; ++k) {
      for (uint32_t c = 0; c < 2; ++c) {
        b.memory(OpCategory::Store, uint8_t(q * 2 * radix + 2 * k + c), true,
                 [&](uint32_t w, uint32_t lane) {
                   uint32_t bf = q * threads + w * kNumLanes + lane;
                   return 2 * (bf * radix + k) + c;
                 });
      }
    }
  }

  // Twiddled stages: one butterfly per thread per sub-iteration, twiddles
  // read in table order and multiplied into each input as it arrives. For
  // radix 16 the data fills all 32 registers, so the twiddle staging pair
  // lives in registers 0..1 until the untwiddled k = 0 input finally lands
  // there.
  uint8_t tw0 = (radix == 16) ? 0 : uint8_t(2 * radix);
  for (uint32_t s = 1; s < plan.stages; ++s) {
    uint32_t span = 1;
    for (uint32_t u = 0; u < s; ++u) span *= radix;   // LR = R^s
    uint32_t sub_fft = span * radix;                  // L
    uint32_t tw_base = plan.stage_twiddle_base(s);
    for (uint32_t q = 0; q < sub_iters; ++q) {
      b.compute(OpCategory::ImmediateOp, ComputeKind::AddressCalc);
      b.compute(OpCategory::IntOp, ComputeKind::AddressCalc);
      b.compute(OpCategory::IntOp, ComputeKind::AddressCalc);
      auto element = [&](uint32_t w, uint32_t lane, uint32_t k) {
        uint32_t bf = q * threads + w * kNumLanes + lane;
        uint32_t block = bf / span, j = bf % span;
        return block * sub_fft + j + k * span;
      };
      for (uint32_t k = 1; k < radix; ++k) {
        for (uint32_t c = 0; c < 2; ++c) {
          b.memory(OpCategory::TwiddleLoad, uint8_t(tw0 + c), true,
                   [&](uint32_t w, uint32_t lane) {
                     uint32_t bf = q * threads + w * kNumLanes + lane;
                     uint32_t j = bf % span;
                     uint32_t idx = tw_base + j * (radix - 1) + (k - 1);
                     return trace.twiddle_base + 2 * idx + c;
                   });
        }
        for (uint32_t c = 0; c < 2; ++c) {
          b.memory(OpCategory::Load, uint8_t(2 * k + c), true,
                   [&](uint32_t w, uint32_t lane) {
                     return 2 * element(w, lane, k) + c;
                   });
        }
        b.compute(OpCategory::FpOp, ComputeKind::ComplexMul, uint8_t(2 * k), tw0);
      }
      for (uint32_t c = 0; c < 2; ++c) {
        b.memory(OpCategory::Load, uint8_t(c), true, [&](uint32_t w, uint32_t lane) {
          return 2 * element(w, lane, 0) + c;
        });
      }
      b.compute(OpCategory::FpOp, ComputeKind::DftCombine, 0, 0, R, inverse);
      for (uint32_t k = 0; k < radix; ++k) {
        for (uint32_t c = 0; c < 2; ++c) {
          b.memory(OpCategory::Store, uint8_t(2 * k + c), true,
                   [&](uint32_t w, uint32_t lane) {
                     return 2 * element(w, lane, k) + c;
                   });
        }
      }
    }
  }
  return trace;
}

std::vector<std::pair<double, double>> reference_dft(
    const std::vector<std::pair<double, double>>& input, bool inverse) {
  size_t n = input.size();
  if (n == 0) throw std::invalid_argument("reference_dft: empty input");
  double sign = inverse ? 1.0 : -1.0;
  std::vector<std::pair<double, double>> out(n);
  for (size_t k = 0; k < n; ++k) {
    double re = 0, im = 0;
    for (size_t t = 0; t < n; ++t) {
      double angle = sign * 2.0 * std::numbers::pi * double((k * t) % n) / double(n);
      double c = std::cos(angle), s = std::sin(angle);
      re += input[t].first * c - input[t].second * s;
      im += input[t].first * s + input[t].second * c;
    }
    out[k] = {re, im};
  }
  return out;
}

}  // namespace membank
