#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace membank {

struct KernelTrace;

// Flat shared-memory contents: 32-bit words, complex values as adjacent
// (real, imag) word pairs.
struct SharedMemoryImage {
  std::vector<uint32_t> words;
  uint32_t data_base = 0;
  uint32_t twiddle_base = 0;

  float load_f32(uint32_t addr) const;
  void store_f32(uint32_t addr, float v);
};

// FNV-1a 64 over the raw words, rendered as "fnv1a64:<16 hex digits>".
std::string image_checksum(const SharedMemoryImage& image);
uint64_t image_checksum_u64(const SharedMemoryImage& image);

// Canonical deterministic input for a kernel: the linear-index pattern for
// transposes, seeded pseudo-random FP32 samples plus the twiddle segment for
// FFTs. total_words must cover the trace's footprint.
SharedMemoryImage build_initial_image(const KernelTrace& trace, uint32_t total_words,
                                      uint32_t seed = 1u);

// Deterministic float in [-1, 1) stream (xorshift32), independent of any
// platform RNG distribution details.
class SampleStream {
 public:
  explicit SampleStream(uint32_t seed) : state_(seed ? seed : 0x9e3779b9u) {}

  uint32_t next_u32() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 17;
    state_ ^= state_ << 5;
    return state_;
  }

  float next_unit() {
    return float(int32_t(next_u32() >> 1) - (1 << 30)) * (1.0f / float(1 << 30));
  }

 private:
  uint32_t state_;
};

}  // namespace membank
