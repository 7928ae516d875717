#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace membank {

// Per-bank arbiter state: bit i set means lane i still needs this bank.
struct ArbiterState {
  uint16_t pending = 0;

  bool done() const { return pending == 0; }
};

// One arbitration step of the carry-based arbiter. Subtracting one from the
// pending vector flips the rightmost set lane marker to '0' and re-asserts
// every marker below it; the '1'->'0' transition is the granted lane and the
// spurious '0'->'1' transitions are zeroed before the vector is stored back.
inline std::pair<uint32_t, ArbiterState> arbiter_step(ArbiterState state) {
  if (state.pending == 0)
    throw std::invalid_argument("arbiter_step: no pending lanes");
  uint16_t decremented = uint16_t(state.pending - 1u);
  uint16_t grant = state.pending & uint16_t(~decremented);   // 1 -> 0 transition
  uint16_t reassert = uint16_t(~state.pending) & decremented;  // 0 -> 1 transitions
  ArbiterState next{uint16_t(decremented & uint16_t(~reassert))};
  return {uint32_t(std::countr_zero(grant)), next};
}

}  // namespace membank
