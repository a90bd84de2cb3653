#pragma once

// Growth engine: runs a TileSystem from its seed to a terminal assembly
// under the temperature-threshold attachment rule.

#include <string>
#include <vector>

#include "tilearith/core.hpp"

namespace tilearith {

struct InvalidTraceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Attachment {
  Pos pos;
  TileId tile;
};

// How the next frontier site is chosen. All orders agree on the terminal
// assembly for deterministic systems; they exist to test exactly that.
enum class FrontierOrder { Lex, Fifo, Lifo };

struct SimulationReport {
  Assembly terminal;
  long steps = 0;
  std::vector<Attachment> trace;
  bool deterministic = true;
  bool halted = false;
};

// Attaches frontier tiles until the frontier empties or max_steps is hit.
// Sets deterministic=false if any selected site ever admitted two or more
// distinct tile types (growth continues regardless). halted=false means
// max_steps ran out with a non-empty frontier.
SimulationReport grow(const TileSystem& sys, long max_steps,
                      FrontierOrder order = FrontierOrder::Lex);

// Re-applies an attachment trace on top of the seed, checking the binding
// threshold at every step. Throws InvalidTraceError naming the step index.
Assembly replay(const TileSystem& sys, const std::vector<Attachment>& trace);

// One `attach <step> <x> <y> <tileid>` line per step.
std::string dump_trace(const std::vector<Attachment>& trace);

}  // namespace tilearith
