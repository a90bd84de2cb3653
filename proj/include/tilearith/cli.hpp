#pragma once

// Orchestrates parse -> compile -> emit / simulate -> decode -> report.
// Exit codes: 0 ok, 2 parse/usage, 3 compile, 4 simulate, 5 decode.

#include <iosfwd>
#include <string>

namespace tilearith {

struct RunConfig {
  std::string expression;
  std::string variant = "eight";  // eight | six | L (addition only)
  bool emit = false;
  std::string emit_path;    // explicit output file; empty = default name
  bool simulate = false;
  std::string render_path;  // .ppm for an image, anything else text grid
  std::string trace_path;   // attachment trace dump
  long max_steps = 0;       // 0 = 16 x expected assembly area
  int temperature = 2;
  std::string out_dir;      // empty = $TILEARITH_OUT_DIR or "."
};

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace tilearith
