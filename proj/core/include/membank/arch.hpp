#pragma once

#include <optional>
#include <string>

#include "membank/types.hpp"

namespace membank {

enum class ArchKind : uint8_t {
  MultiPort4R1W,     // 4 read ports, 1 write port, replicated memory
  MultiPort4R2W,     // 4 read ports, 2 write ports (slower emulated TDP mode)
  MultiPort4R1W_VB,  // 4R-1W with the 4-sub-memory write mode
  Banked,
};

inline constexpr double kClockMhzDefault = 771.0;
inline constexpr double kClockMhz4R2W = 600.0;

// One of the nine memory architectures under study. Cycle counts never
// depend on the clock; only wall time does.
struct MemArchitecture {
  ArchKind kind = ArchKind::Banked;
  std::optional<BankedConfig> banked;  // present iff kind == Banked
  BankMapping vb_mapping = BankMapping::bit_slice(5, 2);  // VB sub-memory select
  double clock_mhz = kClockMhzDefault;

  static MemArchitecture multiport_4r1w() {
    return {ArchKind::MultiPort4R1W, std::nullopt, {}, kClockMhzDefault};
  }
  static MemArchitecture multiport_4r2w() {
    return {ArchKind::MultiPort4R2W, std::nullopt, {}, kClockMhz4R2W};
  }
  static MemArchitecture multiport_4r1w_vb(
      BankMapping vb = BankMapping::bit_slice(5, 2)) {
    return {ArchKind::MultiPort4R1W_VB, std::nullopt, vb, kClockMhzDefault};
  }
  static MemArchitecture make_banked(uint32_t banks, const BankMapping& map,
                                     uint32_t total_words = 16384) {
    return {ArchKind::Banked, BankedConfig::make(banks, map, total_words), {},
            kClockMhzDefault};
  }

  bool is_banked() const { return kind == ArchKind::Banked; }
  bool is_multiport() const { return !is_banked(); }

  // Shared-memory capacity ceiling in KB; multi-port replication runs out of
  // M20K budget long before the banked organization does.
  uint32_t capacity_kb() const {
    switch (kind) {
      case ArchKind::MultiPort4R1W:
      case ArchKind::MultiPort4R1W_VB:
        return 112;
      case ArchKind::MultiPort4R2W:
        return 224;
      case ArchKind::Banked:
        return 448;
    }
    return 0;
  }

  // Canonical slug, e.g. "4r1w", "banked16", "banked8-offset2".
  std::string slug() const;
  // Human name matching the report headers, e.g. "16 Banks Offset".
  std::string display_name() const;

  static std::optional<MemArchitecture> from_slug(const std::string& slug);

  void validate() const {
    if (is_banked()) {
      if (!banked) throw std::invalid_argument("banked arch without BankedConfig");
      banked->validate();
    } else if (banked) {
      throw std::invalid_argument("multi-port arch carries a BankedConfig");
    }
  }
};

}  // namespace membank
