#include <algorithm>

#include "builder.hpp"
#include "tilearith/compile.hpp"

// n-input addition, eight (or six) computational tile types.
//
// Geometry, w = n+m-1 interior columns, significance w-x at column x:
//
//   y = 2n-2   TL  top(w)            TR      stop row
//   y = 2n-3   LF  result row        ER      final adder stage (result family)
//   ...        LF  pair row for a_j  SR      intermediate input rows
//   y = 1      LF  adder stage 1     ER      computational family
//   y = 0      BL  input pairs(w)    BR      seed row: (a2, a1) bit pairs
//
// Adder rows ripple east to west: each tile takes an operand/running-sum bit
// pair from the south and a carry from the east. The pair for the next stage
// is rebuilt by an input row that bakes the next operand's bits per column.
// The final stage is its own family so its tiles can carry the red/white
// result colours.

namespace tilearith {

namespace {

struct PairGlues {
  GlueId p[2][2];
  bool six = false;
  GlueId get(int x, int y) const {
    if (six && x == 1 && y == 0) return p[0][1];  // 10 and 01 act alike
    return p[x][y];
  }
};

}  // namespace

CompiledSystem compile_add8(const AdditionSpec& spec) {
  if (spec.variant == AddVariant::LType)
    throw CompileError("compile_add8: use compile_addL for the L variant");
  const int n = static_cast<int>(spec.inputs.size());
  if (n < 2) throw CompileError("addition needs at least two inputs");
  const bool six = spec.variant == AddVariant::SixTile;

  int m = 1;
  for (std::uint64_t v : spec.inputs) m = std::max(m, bit_length(v));
  const int w = n + m - 1;
  if (w > 62) throw CompileError("layout too wide for a 64-bit result");

  Builder b(six ? "add_6_tile" : "add_8_tile", six ? "add6:" : "add8:");

  const GlueId bit[2] = {b.glue("b0", 1), b.glue("b1", 1)};
  PairGlues pair;
  pair.six = six;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      if (!(six && x == 1 && y == 0))
        pair.p[x][y] = b.glue("p" + std::to_string(x) + std::to_string(y), 1);
  const GlueId carry[2] = {b.glue("c0", 1), b.glue("c1", 1)};
  const GlueId rcarry[2] = {b.glue("r0", 1), b.glue("r1", 1)};
  const GlueId topch = b.glue("t", 1);

  const int top_y = 2 * n - 2;
  auto rglue = [&](int y) {
    return y == top_y ? b.glue("Rtop", 2) : b.glue("R" + std::to_string(y), 2);
  };
  auto lglue = [&](int y) { return b.glue("L" + std::to_string(y), 1); };
  auto inglue = [&](int j, int i) {
    return b.glue("in" + std::to_string(j) + "_" + std::to_string(i), 1);
  };

  // Generic adder tiles. Stage rows share these; the last stage gets its own
  // result-tagged copies wired to the r-carries.
  auto adder_family = [&](const std::string& fam, const GlueId cg[2],
                          bool result) {
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        if (six && x == 1 && y == 0) continue;
        for (int c = 0; c < 2; ++c) {
          int s = x ^ y ^ c;
          int cout = (x & y) | (y & c) | (c & x);
          std::string label = (result ? "r" : "s") + std::to_string(s);
          std::string color = result ? (s ? "red" : "white") : "gray";
          b.tile(label, fam, color, bit[s], cg[c], pair.get(x, y), cg[cout]);
        }
      }
  };
  if (n >= 3) adder_family("computational", carry, false);
  adder_family("result", rcarry, true);

  // Intermediate input rows: rebuild (next operand bit, running-sum bit)
  // pairs. Both running-bit variants exist; growth picks the computed one.
  for (int j = 3; j <= n; ++j)
    for (int x = 1; x <= w; ++x) {
      int alpha = bit_of(spec.inputs[j - 1], w - x);
      for (int u = 0; u < 2; ++u)
        b.tile("i" + std::to_string(j) + std::to_string(alpha), "input",
               "green", pair.get(alpha, u), inglue(j, x), bit[u],
               inglue(j, x - 1));
    }

  // Seed row: operand pair per column, corners at both ends.
  TileId bl = b.tile("BL", "corner", "blue", lglue(1), 0, 0, 0);
  TileId br = b.tile("BR", "corner", "blue", rglue(1), 0, 0, 0);
  std::vector<TileId> lower(w + 1);
  for (int x = 1; x <= w; ++x) {
    int a1 = bit_of(spec.inputs[0], w - x);
    int a2 = bit_of(spec.inputs[1], w - x);
    lower[x] = b.tile("i" + std::to_string(a2) + std::to_string(a1), "input",
                      "green", pair.get(a2, a1), 0, 0, 0);
  }

  // Frames. Right-frame tiles chain with strength-2 glues so a row's carry
  // or chain injection is in place before the row grows; left-frame tiles
  // cap each finished row.
  for (int y = 1; y <= 2 * n - 3; ++y) {
    bool adder_row = (y % 2) == 1;
    int stage = (y + 1) / 2;
    GlueId west_inject, east_cap;
    std::string rlabel;
    if (adder_row) {
      bool result_row = stage == n - 1;
      west_inject = result_row ? rcarry[0] : carry[0];
      east_cap = west_inject;
      rlabel = "ER";
    } else {
      int j = y / 2 + 2;  // operand delivered by the pair row above stage y/2
      west_inject = inglue(j, w);
      east_cap = inglue(j, 0);
      rlabel = "SR";
    }
    b.tile(rlabel, "right-frame", "slate", rglue(y + 1), 0, rglue(y),
           west_inject);
    b.tile("LF", "left-frame", "slate", lglue(y + 1), east_cap, lglue(y), 0);
  }

  // Stop row: two top tiles keyed by the bit below, corner caps.
  b.tile("TR", "corner", "blue", 0, 0, rglue(top_y), topch);
  for (int u = 0; u < 2; ++u)
    b.tile("T" + std::to_string(u), "top-frame", "slate", 0, topch, bit[u],
           topch);
  b.tile("TL", "corner", "blue", 0, topch, lglue(2 * n - 2), 0);

  b.place(0, 0, bl);
  b.place(w + 1, 0, br);
  for (int x = 1; x <= w; ++x) b.place(x, 0, lower[x]);

  CompiledSystem out{b.take(), {}};
  Layout& lay = out.layout;
  lay.kind = ExprKind::Add;
  lay.width = w;
  lay.x_lo = 1;
  lay.x_hi = w;
  lay.result_row = 2 * n - 3;
  for (const TileType& t : out.system.tiles)
    if (t.family == "result")
      lay.result_bits[t.id] = t.label == "r1" ? 1 : 0;
  lay.expected_area = static_cast<long>(w + 2) * (2 * n - 1);
  long comp_types = n >= 3 ? (six ? 6 : 8) : 0;
  lay.counts = {
      {"left-frame", 2 * n - 3, 2 * n - 3},
      {"corner", 4, 4},
      {"right-frame", 2 * n - 3, 2 * n - 3},
      {"top-frame", 2, w},
      {"input", w + 2L * w * (n - 2), static_cast<long>(w) * (n - 1)},
      {"computational", comp_types, static_cast<long>(w) * (n - 2)},
      {"result", six ? 6 : 8, w},
  };
  return out;
}

}  // namespace tilearith
