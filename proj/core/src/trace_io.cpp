#include "membank/trace_io.hpp"

#include <ostream>

#include <json.hpp>

namespace membank {

namespace {

const char* op_kind(const WarpOp& op) {
  switch (op.category) {
    case OpCategory::Load:
    case OpCategory::TwiddleLoad:
      return "read";
    case OpCategory::Store:
      return "write";
    default:
      return "compute";
  }
}

}  // namespace

void write_trace_jsonl(std::ostream& out, const KernelTrace& trace) {
  for (const WarpOp& op : trace.ops) {
    nlohmann::ordered_json j;
    j["instr_index"] = op.instr_index;
    j["kind"] = op_kind(op);
    j["category"] = category_name(op.category);
    auto addresses = nlohmann::ordered_json::array();
    auto active = nlohmann::ordered_json::array();
    if (op.is_memory()) {
      for (const LaneRequest& req : op.requests.lanes) {
        addresses.push_back(req.active ? int64_t(req.address) : 0);
        active.push_back(req.active);
      }
    }
    j["addresses"] = addresses;
    j["active"] = active;
    j["reg"] = op.is_memory() ? int(op.reg) : -1;
    out << j.dump() << "\n";
  }
}

}  // namespace membank
