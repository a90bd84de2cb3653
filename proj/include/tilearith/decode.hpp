#pragma once

// Reads the numeric answer off a terminal assembly using the layout
// metadata the compiler produced next to the system.

#include <optional>
#include <vector>

#include "tilearith/compile.hpp"

namespace tilearith {

struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DecodedResult {
  ExprKind kind = ExprKind::Add;
  std::int64_t value = 0;               // sum / signed sum / product
  int sign = 0;                         // +1 / -1 for signed kinds, else 0
  std::optional<std::int64_t> remainder;
  std::optional<bool> prime;
  std::vector<Pos> read_region;
};

DecodedResult decode(const Layout& layout, const TileSystem& sys,
                     const Assembly& terminal);

}  // namespace tilearith
