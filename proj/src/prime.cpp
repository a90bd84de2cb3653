#include "builder.hpp"
#include "tilearith/compile.hpp"

// Primality testing. Every interior row carries one (n-bit, I-bit, k-bit)
// triple per column. Starting from k = floor(n/2), the rows realize:
//
//   while k != 1 { if n mod k == 0 -> not prime; else k := k - 1 }  -> prime
//
// n mod k runs as repeated subtraction on the middle track: compare I with
// k (most significant column first), subtract while I > k, and when the
// comparison ends equal the remainder is zero. Row kinds and the scan
// directions alternate so each row's verdict lands on the frame column that
// launches the next row:
//
//   converter   W->E  builds (n, n, floor(n/2)) triples from the input bits
//   k!=1 check  E->W  right-to-left scan; the start column copies unchanged
//   I vs k      W->E  three-way comparator states =, <, >
//   I -= k      E->W  bitwise subtraction with borrow (table-driven)
//   k -= 1      E->W  subtract one and reset I := n in the same row
//   copy        W->E  re-aligns after k -= 1 so the check can rescan
//   verdict     top row of prime or not-prime tiles

namespace tilearith {

CompiledSystem compile_prime(const PrimalitySpec& spec) {
  const std::uint64_t n = spec.n;
  if (n < 2) throw CompileError("primality testing needs n >= 2");
  if (n > (1ull << 20))
    throw CompileError("n too large to assemble at tile scale");
  const int M = bit_length(n);

  Builder b("prime_tile", "pr:");

  const GlueId bit[2] = {b.glue("b0", 1), b.glue("b1", 1)};
  const GlueId cv[2] = {b.glue("cv0", 1), b.glue("cv1", 1)};
  GlueId T[2][2][2];
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        T[a][i][k] = b.glue("T" + std::to_string(a) + std::to_string(i) +
                                std::to_string(k),
                            1);
  const GlueId st = b.glue("st", 1);
  const GlueId sk[2] = {b.glue("s0", 1), b.glue("s1", 1)};
  const GlueId big = b.glue("big", 1);
  const GlueId eq = b.glue("eq", 1);
  const GlueId lt = b.glue("lt", 1);
  const GlueId gt = b.glue("gt", 1);
  const GlueId dg[2] = {b.glue("d0", 1), b.glue("d1", 1)};
  const GlueId eg[2] = {b.glue("e0", 1), b.glue("e1", 1)};
  const GlueId yc = b.glue("yc", 1);
  const GlueId pc = b.glue("pc", 1);
  const GlueId nc = b.glue("nc", 1);

  // One-bit-to-three-bit converter: k is n shifted right once, so each
  // column picks up its west neighbour's n-bit.
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v)
      b.tile("v" + std::to_string(u), "converter", "gray", T[u][u][v], cv[u],
             bit[u], cv[v]);

  // k != 1 scan. The start tiles sit on the least significant column and
  // move the triple up unchanged; west of them any set k-bit is decisive.
  for (int u = 0; u < 2; ++u)
    for (int k = 0; k < 2; ++k)
      b.tile("z" + std::to_string(k), "rl-move", "gray", T[u][u][k], st,
             T[u][u][k], sk[k]);
  const GlueId states1[3] = {sk[0], sk[1], big};
  for (int u = 0; u < 2; ++u)
    for (int k = 0; k < 2; ++k)
      for (int s = 0; s < 3; ++s)
        b.tile("k" + std::to_string(k), "check-gt1", "gray", T[u][u][k],
               states1[s], T[u][u][k], k ? big : states1[s]);

  // I vs k comparator, most significant column first.
  const GlueId states3[3] = {eq, lt, gt};
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        for (int s = 0; s < 3; ++s) {
          GlueId out = states3[s];
          if (s == 0 && i != k) out = i > k ? gt : lt;
          b.tile("c" + std::to_string(i), "check-cgb", "cyan", T[a][i][k], out,
                 T[a][i][k], states3[s]);
        }

  // I -= k with borrow; the bitwise table gives sum and borrow-out.
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        for (int d = 0; d < 2; ++d) {
          int s = i ^ k ^ d;
          int dout = (((1 - i) & k) | ((1 - i) & d) | (k & d)) & 1;
          b.tile("s" + std::to_string(s), "sub-ik", "gray", T[a][s][k], dg[d],
                 T[a][i][k], dg[dout]);
        }

  // k -= 1 (borrow rides in seeded by the frame) and I := n together.
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        for (int d = 0; d < 2; ++d) {
          int s = k ^ d;
          int dout = (1 - k) & d & 1;
          b.tile("w" + std::to_string(s), "sub-k1", "gray", T[a][a][s], eg[d],
                 T[a][i][k], eg[dout]);
        }

  for (int u = 0; u < 2; ++u)
    for (int k = 0; k < 2; ++k)
      b.tile("y" + std::to_string(u), "copy-row", "gray", T[u][u][k], yc,
             T[u][u][k], yc);

  for (int u = 0; u < 2; ++u)
    for (int k = 0; k < 2; ++k)
      b.tile("P", "verdict-prime", "lime", 0, pc, T[u][u][k], pc);
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        b.tile("N", "verdict-notprime", "orange", 0, nc, T[a][i][k], nc);

  // Frames. Dispatch glues are strength 2; plain chain glues strength 1.
  const GlueId Lcv = b.glue("Lcv", 2);
  const GlueId L2 = b.glue("L2", 1);
  const GlueId L5 = b.glue("L5", 1);
  const GlueId primego = b.glue("primego", 2);
  const GlueId cmpgo = b.glue("cmpgo", 2);
  const GlueId copygo = b.glue("copygo", 2);
  const GlueId Rcv = b.glue("Rcv", 1);
  const GlueId chkgo = b.glue("chkgo", 2);
  const GlueId Rc = b.glue("Rc", 1);
  const GlueId Rd = b.glue("Rd", 1);
  const GlueId subgo = b.glue("subgo", 2);
  const GlueId npgo = b.glue("npgo", 2);
  const GlueId decgo = b.glue("decgo", 2);

  b.tile("LF", "left-frame", "slate", L2, cv[0], Lcv, 0);
  for (int u = 0; u < 2; ++u)
    b.tile("RF", "right-frame", "slate", chkgo, 0, Rcv, cv[u]);
  b.tile("RF", "right-frame", "slate", Rc, 0, chkgo, st);
  b.tile("LF", "left-frame", "slate", primego, sk[1], L2, 0);
  b.tile("LF", "left-frame", "slate", cmpgo, big, L2, 0);
  b.tile("LF", "left-frame", "slate", L5, eq, cmpgo, 0);
  b.tile("RF", "right-frame", "slate", subgo, 0, Rc, gt);
  b.tile("RF", "right-frame", "slate", npgo, 0, Rc, eq);
  b.tile("RF", "right-frame", "slate", decgo, 0, Rc, lt);
  b.tile("RF", "right-frame", "slate", Rc, 0, subgo, dg[0]);
  b.tile("LF", "left-frame", "slate", cmpgo, dg[0], L5, 0);
  b.tile("RF", "right-frame", "slate", Rd, 0, decgo, eg[1]);
  b.tile("LF", "left-frame", "slate", copygo, eg[0], L5, 0);
  b.tile("LF", "left-frame", "slate", L2, yc, copygo, 0);
  b.tile("RF", "right-frame", "slate", chkgo, 0, Rd, yc);
  b.tile("LF", "left-frame", "slate", 0, pc, primego, 0);
  b.tile("RF", "right-frame", "slate", 0, 0, Rc, pc);
  b.tile("RF", "right-frame", "slate", 0, 0, npgo, nc);
  b.tile("LF", "left-frame", "slate", 0, nc, L5, 0);

  // Seed: the input row plus two corners anchoring the frame columns.
  TileId blc = b.tile("BL", "corner", "blue", Lcv, 0, 0, 0);
  TileId brc = b.tile("BR", "corner", "blue", Rcv, 0, 0, 0);
  b.place(0, 0, blc);
  b.place(M + 1, 0, brc);
  for (int x = 1; x <= M; ++x) {
    int u = bit_of(n, M - x);
    TileId t = b.tile("i" + std::to_string(u), "input", "green", bit[u], 0, 0, 0);
    b.place(x, 0, t);
  }

  // Row count of the terminal assembly, following the loop the tiles run.
  long rows = 2;  // input + converter
  {
    std::uint64_t k = n / 2;
    std::uint64_t I = n;
    for (;;) {
      rows += 1;  // k != 1 check
      if (k == 1) {
        rows += 1;  // prime verdict
        break;
      }
      rows += 1;  // comparison
      while (I > k) {
        I -= k;
        rows += 2;  // subtraction + next comparison
      }
      if (I == k) {
        rows += 1;  // not-prime verdict
        break;
      }
      rows += 2;  // k -= 1, re-align copy
      --k;
      I = n;
    }
  }

  CompiledSystem out{b.take(), {}};
  Layout& lay = out.layout;
  lay.kind = ExprKind::Prime;
  lay.width = M;
  lay.x_lo = 1;
  lay.x_hi = M;
  lay.result_row = -1;
  for (const TileType& t : out.system.tiles) {
    if (t.family == "verdict-prime") lay.verdict_tiles[t.id] = true;
    if (t.family == "verdict-notprime") lay.verdict_tiles[t.id] = false;
  }
  lay.expected_area = static_cast<long>(M + 2) * rows;
  lay.counts = {
      {"converter", 4, M},
      {"check-gt1", 12, -1},
      {"check-cgb", 24, -1},
      {"rl-move", 4, -1},
      {"sub-ik", 16, -1},
      {"sub-k1", 16, -1},
      {"copy-row", 4, -1},
      {"input", M, M},
      {"corner", 2, 2},
  };
  return out;
}

}  // namespace tilearith
