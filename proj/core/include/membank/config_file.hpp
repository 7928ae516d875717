#pragma once

#include <string>

#include "membank/timing.hpp"

namespace membank {

// Flat TOML-style key/value overrides for the timing model, e.g.
//   # controller calibration
//   per_instruction_overhead_read = 26
//   bank_latency = 3
// Unknown keys are rejected. CLI flags take precedence over file values.
void apply_config_text(const std::string& text, TimingParams& params);
void apply_config_file(const std::string& path, TimingParams& params);

}  // namespace membank
