#include "membank/schedule.hpp"

#include "membank/arbiter.hpp"

namespace membank {

AccessSchedule build_schedule(const LaneRequestSet& requests,
                              const BankedConfig& config) {
  config.validate();
  ConflictProfile profile = conflict_profile(requests, config);

  AccessSchedule sched;
  sched.duration = profile.max_conflicts;
  sched.bank_latency = config.bank_latency_cycles;
  sched.num_banks = config.num_banks;
  sched.grants.assign(sched.duration, {});
  sched.writebacks.assign(sched.duration ? sched.duration + config.bank_latency_cycles : 0, {});
  for (auto& row : sched.grants) row.fill(kNoGrant);
  for (auto& row : sched.writebacks) row.fill(kNoGrant);

  std::vector<ArbiterState> arb(config.num_banks);
  for (uint32_t bank = 0; bank < config.num_banks; ++bank)
    arb[bank].pending = profile.bank_column(bank);

  for (uint32_t t = 0; t < sched.duration; ++t) {
    for (uint32_t bank = 0; bank < config.num_banks; ++bank) {
      if (arb[bank].done()) continue;
      auto [lane, next] = arbiter_step(arb[bank]);
      arb[bank] = next;
      sched.grants[t][bank] = int8_t(lane);
      sched.writebacks[t + config.bank_latency_cycles][lane] = int8_t(bank);
    }
  }
  return sched;
}

}  // namespace membank
