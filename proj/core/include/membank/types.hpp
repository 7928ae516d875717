#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace membank {

// 16 SPs issue one memory request per clock; the group of 16 requests is
// one memory operation.
inline constexpr uint32_t kNumLanes = 16;

// Word addresses are nominally 16 bits wide.
inline constexpr uint32_t kAddressBits = 16;

enum class MapKind : uint8_t {
  LsbIndex,  // bank = address[width-1:0]
  BitSlice,  // bank = address[shift+width-1:shift]
};

// Address-to-bank index function. LsbIndex is BitSlice with shift 0.
struct BankMapping {
  MapKind kind = MapKind::LsbIndex;
  uint32_t shift = 0;  // bit position where the bank index field starts
  uint32_t width = 4;  // log2(bank count), one of {2, 3, 4}

  static BankMapping lsb(uint32_t width) { return {MapKind::LsbIndex, 0, width}; }
  static BankMapping bit_slice(uint32_t shift, uint32_t width) {
    return {MapKind::BitSlice, shift, width};
  }

  uint32_t num_banks() const { return 1u << width; }

  bool valid() const {
    if (width < 2 || width > 4) return false;
    uint32_t sh = (kind == MapKind::LsbIndex) ? 0 : shift;
    return sh + width <= kAddressBits;
  }
};

inline uint32_t map_bank(uint32_t address, const BankMapping& mapping) {
  uint32_t sh = (mapping.kind == MapKind::LsbIndex) ? 0 : mapping.shift;
  return (address >> sh) & (mapping.num_banks() - 1);
}

// Banked shared-memory geometry. Reads and writes see the same banking.
struct BankedConfig {
  uint32_t num_banks = 16;
  BankMapping mapping = BankMapping::lsb(4);
  uint32_t words_per_bank = 1024;
  uint32_t bank_latency_cycles = 3;

  static BankedConfig make(uint32_t banks, const BankMapping& map,
                           uint32_t total_words = 16384) {
    BankedConfig c;
    c.num_banks = banks;
    c.mapping = map;
    c.words_per_bank = total_words / banks;
    return c;
  }

  uint32_t total_words() const { return words_per_bank * num_banks; }

  void validate() const {
    if (!mapping.valid()) throw std::invalid_argument("invalid bank mapping");
    if (num_banks != mapping.num_banks())
      throw std::invalid_argument("num_banks must equal 2^mapping.width");
  }
};

struct LaneRequest {
  bool active = false;
  uint32_t address = 0;  // word address; meaningless when inactive
};

// One memory operation: the 16 requests issued in a single clock.
struct LaneRequestSet {
  std::array<LaneRequest, kNumLanes> lanes{};

  void set(uint32_t lane, uint32_t address) {
    lanes[lane] = {true, address};
  }

  uint32_t active_count() const {
    uint32_t n = 0;
    for (const auto& l : lanes) n += l.active ? 1 : 0;
    return n;
  }

  bool any_active() const {
    for (const auto& l : lanes)
      if (l.active) return true;
    return false;
  }
};

}  // namespace membank
