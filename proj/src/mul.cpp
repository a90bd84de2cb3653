#include "builder.hpp"
#include "tilearith/compile.hpp"

// n-input multiplication. The first operand rides the seed row; every other
// operand sits in the right (vertical) frame, one tile per bit, least
// significant first, each block closed by a separator tile. The interior
// carries two tracks per column as a pair glue: the shifting multiplicand p
// and the accumulator r. A bit row either adds p into r (multiplier bit 1)
// or only shifts (bit 0); p moves one column west per row via the east-west
// glue stream. A separator row restarts the next block with p := r, r := 0,
// so the running product becomes the new multiplicand.

namespace tilearith {

CompiledSystem compile_mul(const MultiplicationSpec& spec) {
  const int n = static_cast<int>(spec.inputs.size());
  if (n < 2) throw CompileError("multiplication needs at least two inputs");
  for (std::uint64_t v : spec.inputs)
    if (v == 0)
      throw CompileError(
          "multiplication by zero is not constructed; the product is 0");

  int W = 0;
  for (std::uint64_t v : spec.inputs) W += bit_length(v);
  if (W > 62) throw CompileError("layout too wide for a 64-bit result");

  Builder b("mul_tile", "mul:");

  GlueId q[2][2];
  for (int p = 0; p < 2; ++p)
    for (int r = 0; r < 2; ++r)
      q[p][r] = b.glue("q" + std::to_string(p) + std::to_string(r), 1);
  GlueId addg[2][2];  // [carry][incoming p]
  for (int c = 0; c < 2; ++c)
    for (int pe = 0; pe < 2; ++pe)
      addg[c][pe] = b.glue("A" + std::to_string(c) + std::to_string(pe), 1);
  GlueId skipg[2] = {b.glue("S0", 1), b.glue("S1", 1)};
  GlueId swapg = n >= 3 ? b.glue("X", 1) : 0;
  GlueId stopg = b.glue("st", 1);

  for (int p = 0; p < 2; ++p)
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c)
        for (int pe = 0; pe < 2; ++pe) {
          int s = r ^ p ^ c;
          int cout = (r & p) | (p & c) | (c & r);
          b.tile("m" + std::to_string(s), "computational", "gray", q[pe][s],
                 addg[c][pe], q[p][r], addg[cout][p]);
        }
      for (int pe = 0; pe < 2; ++pe)
        b.tile("m" + std::to_string(r), "computational", "gray", q[pe][r],
               skipg[pe], q[p][r], skipg[p]);
      if (n >= 3)
        b.tile("cp", "computational", "gray", q[r][0], swapg, q[p][r], swapg);
    }

  // Row schedule: bit rows per operand, separator rows between operands.
  struct Row {
    enum Kind { Add, Skip, Swap } kind;
  };
  std::vector<Row> rows;
  for (int k = 2; k <= n; ++k) {
    int mk = bit_length(spec.inputs[k - 1]);
    for (int theta = 0; theta < mk; ++theta)
      rows.push_back({bit_of(spec.inputs[k - 1], theta) ? Row::Add : Row::Skip});
    if (k < n) rows.push_back({Row::Swap});
  }
  const int Y = static_cast<int>(rows.size());

  auto vglue = [&](int y) {
    return y == Y + 1 ? b.glue("Vtop", 2) : b.glue("V" + std::to_string(y), 2);
  };
  for (int y = 1; y <= Y; ++y) {
    GlueId inject = 0;
    const char* label = "V";
    switch (rows[y - 1].kind) {
      case Row::Add: inject = addg[0][0]; label = "V1"; break;
      case Row::Skip: inject = skipg[0]; label = "V0"; break;
      case Row::Swap: inject = swapg; label = "V#"; break;
    }
    b.tile(label, "vertical-frame", "slate", vglue(y + 1), 0, vglue(y), inject);
  }

  // Stop row: generic caps keyed by the pair below; the r track is the
  // product and drives the red/white display colours.
  b.tile("TR", "top-frame", "blue", 0, 0, vglue(Y + 1), stopg);
  for (int p = 0; p < 2; ++p)
    for (int r = 0; r < 2; ++r)
      b.tile("o" + std::to_string(r), "top-frame", r ? "red" : "white", 0,
             stopg, q[p][r], stopg);

  // Seed: one corner tile only; the base row and the vertical frame both
  // grow out of it along strength-2 chains.
  auto hglue = [&](int x) { return b.glue("h" + std::to_string(x), 2); };
  TileId corner = b.tile("SD", "seed", "blue", vglue(1), 0, 0, hglue(W));
  b.place(W + 1, 0, corner);
  for (int x = W; x >= 1; --x) {
    int p = bit_of(spec.inputs[0], W - x);
    b.tile("h" + std::to_string(p), "horizontal-frame", "green", q[p][0],
           hglue(x), 0, hglue(x - 1));
  }

  CompiledSystem out{b.take(), {}};
  Layout& lay = out.layout;
  lay.kind = ExprKind::Mul;
  lay.width = W;
  lay.x_lo = 1;
  lay.x_hi = W;
  lay.result_row = Y + 1;
  for (const TileType& t : out.system.tiles)
    if (t.family == "top-frame" && t.label[0] == 'o')
      lay.result_bits[t.id] = t.label == "o1" ? 1 : 0;
  lay.expected_area = static_cast<long>(W + 1) * (Y + 2);
  lay.counts = {
      {"seed", 1, 1},
      {"horizontal-frame", W, W},
      {"vertical-frame", Y, Y},
      {"top-frame", 5, W + 1},
      {"computational", n >= 3 ? 28 : 24, static_cast<long>(W) * Y},
  };
  return out;
}

}  // namespace tilearith
