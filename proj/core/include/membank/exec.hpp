#pragma once

#include <stdexcept>

#include "membank/memory_image.hpp"
#include "membank/trace.hpp"

namespace membank {

// Functional execution fault, carrying the offending warp-op index.
struct ExecError : std::runtime_error {
  size_t op_index;
  ExecError(size_t idx, const std::string& what)
      : std::runtime_error("op " + std::to_string(idx) + ": " + what),
        op_index(idx) {}
};

// Executes the per-lane register semantics of a trace against a memory
// image and returns the final image. The result depends only on the trace
// and the image, never on a memory architecture.
SharedMemoryImage execute_functional(const KernelTrace& trace,
                                     SharedMemoryImage memory);

}  // namespace membank
