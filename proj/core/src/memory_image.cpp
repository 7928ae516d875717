#include "membank/memory_image.hpp"

#include <bit>
#include <cstdio>
#include <stdexcept>

#include "membank/fft.hpp"
#include "membank/trace.hpp"

namespace membank {

float SharedMemoryImage::load_f32(uint32_t addr) const {
  return std::bit_cast<float>(words.at(addr));
}

void SharedMemoryImage::store_f32(uint32_t addr, float v) {
  words.at(addr) = std::bit_cast<uint32_t>(v);
}

uint64_t image_checksum_u64(const SharedMemoryImage& image) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (uint32_t w : image.words) {
    for (int i = 0; i < 4; ++i) {
      h ^= (w >> (8 * i)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  }
  return h;
}

std::string image_checksum(const SharedMemoryImage& image) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                (unsigned long long)image_checksum_u64(image));
  return buf;
}

SharedMemoryImage build_initial_image(const KernelTrace& trace, uint32_t total_words,
                                      uint32_t seed) {
  if (total_words < trace.total_words())
    throw std::invalid_argument("memory image smaller than kernel footprint");
  SharedMemoryImage image;
  image.words.assign(total_words, 0);
  image.twiddle_base = trace.twiddle_base;

  if (trace.kernel == KernelKind::Transpose) {
    for (uint32_t i = 0; i < trace.data_words; ++i) image.words[i] = i;
    return image;
  }

  SampleStream samples(seed);
  for (uint32_t i = 0; i < trace.data_words; ++i)
    image.store_f32(i, samples.next_unit());
  write_twiddle_table(image, trace.radix, trace.size, trace.inverse);
  return image;
}

}  // namespace membank
