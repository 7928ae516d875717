#pragma once

#include <iosfwd>

#include "membank/trace.hpp"

namespace membank {

// JSON-lines trace export, one record per warp op:
//   {"instr_index": .., "kind": "read"|"write"|"compute", "category": ..,
//    "addresses": [16 ints], "active": [16 bools], "reg": ..}
// Compute ops carry empty address/active arrays and reg -1.
void write_trace_jsonl(std::ostream& out, const KernelTrace& trace);

}  // namespace membank
