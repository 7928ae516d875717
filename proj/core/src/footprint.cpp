#include "membank/footprint.hpp"

#include "membank/sim.hpp"

namespace membank {

namespace {

// Per-bank-count read+write access controller logic, outside the locked
// sector and placed unconstrained.
double banked_controller_alms(uint32_t banks) {
  switch (banks) {
    case 4: return 342.0 + 811.0;
    case 8: return 511.0 + 1094.0;
    case 16: return 789.0 + 1507.0;
    default: throw std::invalid_argument("unsupported bank count");
  }
}

}  // namespace

FootprintEstimate footprint_estimate(const MemArchitecture& arch, uint32_t mem_kb) {
  arch.validate();
  if (mem_kb == 0) throw std::invalid_argument("memory size must be positive");
  if (mem_kb > arch.capacity_kb())
    throw CapacityError(arch.display_name() + " supports a maximum of " +
                        std::to_string(arch.capacity_kb()) + " KB (requested " +
                        std::to_string(mem_kb) + " KB)");

  FootprintEstimate est;
  if (arch.is_banked()) {
    est.memory_alm = kSectorAlms * double(arch.banked->num_banks) / 16.0;
    est.with_core_alm = est.memory_alm + banked_controller_alms(arch.banked->num_banks) +
                        kCoreCommonAlms;
  } else {
    if (mem_kb <= kMultiportFreeKb) {
      est.memory_alm = kMultiportBaseAlms;
    } else {
      double span = double(arch.capacity_kb() - kMultiportFreeKb);
      est.memory_alm = kMultiportBaseAlms + (kSectorAlms - kMultiportBaseAlms) *
                                                double(mem_kb - kMultiportFreeKb) / span;
    }
    est.with_core_alm = est.memory_alm + kCoreCommonAlms;
  }
  est.sectors = est.memory_alm / kSectorAlms;
  return est;
}

}  // namespace membank
