#pragma once

#include "membank/memory_image.hpp"
#include "membank/transpose.hpp"

namespace membank {

// Stage geometry of a radix-R decimation-in-time FFT over `points` samples.
struct FftPlan {
  uint32_t radix = 16;
  uint32_t points = 4096;
  uint32_t stages = 3;  // log_radix(points)

  static FftPlan make(uint32_t radix, uint32_t points);

  uint64_t data_load_ops() const { return uint64_t(stages) * points * 2 / kNumLanes; }
  uint64_t data_store_ops() const { return data_load_ops(); }
  uint64_t twiddle_load_ops() const {
    return uint64_t(stages - 1) * (points / radix) * (radix - 1) * 2 / kNumLanes;
  }

  // Distinct twiddles of stage s (1-based twiddle stages): radix^s * (radix-1)
  // complex values; stage 0 needs none.
  uint32_t stage_twiddles(uint32_t stage) const;
  uint32_t stage_twiddle_base(uint32_t stage) const;  // complex index
  uint32_t total_twiddles() const;                    // complex count
};

// In-place radix-R FFT trace over interleaved complex FP32 data at word 0,
// twiddles following the data. The input reordering is folded into the first
// stage's load addresses (digit-reversed gather); every other stage reads and
// writes the butterfly positions it owns. All stores are blocking: each
// stage's output is reread immediately by the next.
//
// With `inverse`, the trace expects a conjugate twiddle table and conjugate
// butterfly constants; output is unscaled (N times the inverse DFT).
KernelTrace gen_fft(uint32_t radix, uint32_t points = 4096,
                    GenMode mode = GenMode::Native, bool inverse = false,
                    uint32_t threads = 256);

// W_modulus^exponent (forward: exp(-2*pi*i*e/m)), computed in double and
// rounded to FP32 at the end.
std::pair<float, float> twiddle_value(uint32_t exponent, uint32_t modulus,
                                      bool inverse = false);

// Writes the per-stage twiddle segment W_L^(j*k) (interleaved FP32, computed
// in double, rounded at storage) into image.words at image.twiddle_base, in
// the order the kernel reads them.
void write_twiddle_table(SharedMemoryImage& image, uint32_t radix, uint32_t points,
                         bool inverse = false);

// Direct O(N^2) DFT in double precision; the data-correctness oracle for the
// trace pipeline.
std::vector<std::pair<double, double>> reference_dft(
    const std::vector<std::pair<double, double>>& input, bool inverse = false);

}  // namespace membank
