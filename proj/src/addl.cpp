#include <algorithm>

#include "builder.hpp"
#include "tilearith/compile.hpp"

// n-input addition in the L configuration: the first operand spans the seed
// row and every further operand enters bit by bit from the right frame, one
// row per bit, least significant bit first. A moving mark on the north/south
// bit glues tracks which column the next bit lands on; the first row of each
// operand after the second re-aims the mark at column zero while sweeping
// stale marks away. The running sum is always the north face of the last
// grown row; a strength-2 chain lays a stop lid over the final row.

namespace tilearith {

CompiledSystem compile_addL(const AdditionSpec& spec) {
  const int n = static_cast<int>(spec.inputs.size());
  if (n < 2) throw CompileError("addition needs at least two inputs");

  int m = 1;
  for (std::uint64_t v : spec.inputs) m = std::max(m, bit_length(v));
  const int w = n + m - 1;
  if (w > 62) throw CompileError("layout too wide for a 64-bit result");

  Builder b("add_L_tile", "addl:");

  const GlueId bit[2] = {b.glue("b0", 1), b.glue("b1", 1)};
  const GlueId mark[2] = {b.glue("m0", 1), b.glue("m1", 1)};
  const GlueId in[2] = {b.glue("in0", 1), b.glue("in1", 1)};
  const GlueId cmk[2] = {b.glue("cm0", 1), b.glue("cm1", 1)};
  const GlueId car[2] = {b.glue("c0", 1), b.glue("c1", 1)};
  GlueId inr[2] = {0, 0};
  GlueId rmk[2] = {0, 0};
  GlueId rcar[2] = {0, 0};
  if (n >= 3) {
    inr[0] = b.glue("ir0", 1);
    inr[1] = b.glue("ir1", 1);
    rmk[0] = b.glue("rm0", 1);
    rmk[1] = b.glue("rm1", 1);
    rcar[0] = b.glue("rc0", 1);
    rcar[1] = b.glue("rc1", 1);
  }

  // Computational tiles. pass/target/carry-mark/carry are the two-input core;
  // the reset family restarts the mark at column zero for later operands.
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v)
      b.tile("a" + std::to_string(u), "computational", "gray", bit[u], in[v],
             bit[u], in[v]);
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v)
      b.tile("s" + std::to_string(u ^ v), "computational", "gray", bit[u ^ v],
             in[v], mark[u], cmk[u & v]);
  for (int u = 0; u < 2; ++u)
    for (int c = 0; c < 2; ++c) {
      b.tile("s" + std::to_string(u ^ c), "computational", "gray", mark[u ^ c],
             cmk[c], bit[u], car[u & c]);
      b.tile("s" + std::to_string(u ^ c), "computational", "gray", bit[u ^ c],
             car[c], bit[u], car[u & c]);
    }
  if (n >= 3) {
    for (int u = 0; u < 2; ++u)
      for (int v = 0; v < 2; ++v)
        b.tile("s" + std::to_string(u ^ v), "computational", "gray",
               bit[u ^ v], inr[v], bit[u], rmk[u & v]);
    for (int s = 0; s < 2; ++s)  // south may carry a stale mark
      for (int u = 0; u < 2; ++u)
        for (int c = 0; c < 2; ++c) {
          GlueId south = s ? mark[u] : bit[u];
          b.tile("s" + std::to_string(u ^ c), "computational", "gray",
                 mark[u ^ c], rmk[c], south, rcar[u & c]);
          b.tile("s" + std::to_string(u ^ c), "computational", "gray",
                 bit[u ^ c], rcar[c], south, rcar[u & c]);
        }
  }

  // One row per bit of each operand after the first.
  struct Row {
    int bitvalue;
    bool reset;
  };
  std::vector<Row> rows;
  for (int k = 2; k <= n; ++k) {
    int mk = bit_length(spec.inputs[k - 1]);
    for (int theta = 0; theta < mk; ++theta)
      rows.push_back({bit_of(spec.inputs[k - 1], theta), theta == 0 && k >= 3});
  }
  const int R = static_cast<int>(rows.size());

  auto rglue = [&](int y) {
    return y == R + 1 ? b.glue("Rtop", 2) : b.glue("R" + std::to_string(y), 2);
  };
  auto lglue = [&](int y) { return b.glue("L" + std::to_string(y), 1); };

  for (int y = 1; y <= R; ++y) {
    const Row& row = rows[y - 1];
    GlueId inject = row.reset ? inr[row.bitvalue] : in[row.bitvalue];
    GlueId cap = row.reset ? rcar[0] : car[0];
    b.tile("ER", "right-frame", "slate", rglue(y + 1), 0, rglue(y), inject);
    b.tile("LF", "left-frame", "slate", lglue(y + 1), cap, lglue(y), 0);
  }

  // Stop lid rides a strength-2 chain from the top of the right frame.
  auto tch = [&](int x) { return b.glue("tc" + std::to_string(x), 2); };
  b.tile("TR", "top-frame", "slate", 0, 0, rglue(R + 1), tch(w));
  for (int x = w; x >= 1; --x)
    b.tile("T", "top-frame", "slate", 0, tch(x), 0, tch(x - 1));
  b.tile("TL", "top-frame", "slate", 0, tch(0), lglue(R + 1), 0);

  // Seed row: base of the left frame, the first operand (marked at the
  // least significant column), and the corner that starts the right frame.
  TileId base = b.tile("LB", "left-frame", "slate", lglue(1), 0, 0, 0);
  TileId rb = b.tile("RB", "corner", "blue", rglue(1), 0, 0, 0);
  b.place(0, 0, base);
  b.place(w + 1, 0, rb);
  for (int x = 1; x <= w; ++x) {
    int u = bit_of(spec.inputs[0], w - x);
    GlueId north = x == w ? mark[u] : bit[u];
    TileId t = b.tile("i" + std::to_string(u), "input", "green", north, 0, 0, 0);
    b.place(x, 0, t);
  }

  CompiledSystem out{b.take(), {}};
  Layout& lay = out.layout;
  lay.kind = ExprKind::Add;
  lay.width = w;
  lay.x_lo = 1;
  lay.x_hi = w;
  lay.result_row = R;
  for (const TileType& t : out.system.tiles)
    if (t.family == "computational")
      lay.result_bits[t.id] = t.label == "s1" || t.label == "a1" ? 1 : 0;
  lay.expected_area = static_cast<long>(w + 2) * (R + 2);
  long sum_mk = R;
  lay.counts = {
      {"left-frame", 1 + sum_mk, 1 + sum_mk},
      {"right-frame", sum_mk, sum_mk},
      {"top-frame", 2 + w, 2 + w},
      {"computational", n >= 3 ? 36 : 16, static_cast<long>(w) * R},
      {"input", w, w},
      {"corner", 1, 1},
  };
  return out;
}

}  // namespace tilearith
