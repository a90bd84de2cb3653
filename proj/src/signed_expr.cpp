#include <algorithm>
#include <cstdlib>

#include "builder.hpp"
#include "tilearith/compile.hpp"

// Signed expressions sum(beta_i * a_i), optionally followed by mod t.
//
// The lower region mirrors eight-tile addition, except every east-west
// stream glue carries the row's operation sign: plus rows use the a-stream
// (carry), minus rows the s-stream (borrow, per the bitwise subtraction
// table). The running value is w-bit two's complement.
//
// Three finalization rows turn the final two's-complement row into
// sign-magnitude: a scan row latches the sign at the most significant
// column and copies or inverts the bits while broadcasting the mode
// eastward, a pairing row bakes the +0 / +1 correction constant, and one
// more plus row produces the magnitude.
//
// With a modulus the magnitude feeds a division region built from repeated
// subtraction: a pairing row bakes t against the remainder, a comparator row
// scans most-significant-first, and the right frame dispatches either
// another subtraction pass or the terminal remainder row.

namespace tilearith {

namespace {

struct SignedPlan {
  int n = 0;
  int w = 0;
  std::int64_t total = 0;     // signed value of the expression
  std::uint64_t magnitude = 0;
  std::uint64_t quotient = 0;  // |total| / t when a modulus is present
};

SignedPlan plan_signed(const SignedExpressionSpec& spec) {
  SignedPlan plan;
  plan.n = static_cast<int>(spec.terms.size());
  if (plan.n < 2) throw CompileError("signed expression needs at least two terms");
  if (spec.terms.front().sign != +1)
    throw CompileError("first term must be positive (front-end prepends +0)");
  int m = 1;
  for (const SignedTerm& t : spec.terms) {
    if (t.sign != +1 && t.sign != -1)
      throw CompileError("term signs must be +1 or -1");
    m = std::max(m, bit_length(t.magnitude));
  }
  int w = plan.n + m - 1;

  // Every intermediate value must fit in w-1 magnitude bits so the
  // two's-complement rows never overflow. Widen when the requested width
  // cannot hold a prefix (possible once a modulus allows all-plus terms).
  if (m > 56) throw CompileError("term magnitudes too wide for this layout");
  std::int64_t run = 0;
  std::uint64_t maxmag = 0;
  for (const SignedTerm& t : spec.terms) {
    run += t.sign * static_cast<std::int64_t>(t.magnitude);
    if (run > (1ll << 60) || run < -(1ll << 60))
      throw CompileError("intermediate value too wide for this layout");
    maxmag = std::max<std::uint64_t>(maxmag, std::llabs(run));
  }
  plan.total = run;
  plan.magnitude = static_cast<std::uint64_t>(std::llabs(run));
  w = std::max(w, bit_length(maxmag) + 1);
  if (spec.modulus) w = std::max(w, bit_length(*spec.modulus));
  if (w > 62) throw CompileError("expression too wide for this layout");
  plan.w = w;
  if (spec.modulus) {
    plan.quotient = plan.magnitude / *spec.modulus;
    if (plan.quotient > (1ull << 20))
      throw CompileError("remainder loop too long to assemble at tile scale");
  }
  return plan;
}

}  // namespace

static CompiledSystem compile_signed_impl(const SignedExpressionSpec& spec,
                                          bool with_mod) {
  if (with_mod) {
    if (!spec.modulus) throw CompileError("modular expression needs a modulus");
    if (*spec.modulus < 2) throw CompileError("modulus must be at least 2");
  }
  SignedPlan plan = plan_signed(spec);
  const int n = plan.n;
  const int w = plan.w;
  const std::uint64_t t_mod = with_mod ? *spec.modulus : 0;

  Builder b(with_mod ? "mod_tile" : "addsub_tile", with_mod ? "mod:" : "pm:");

  const GlueId bit[2] = {b.glue("b0", 1), b.glue("b1", 1)};
  GlueId pairg[2][2];
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      pairg[x][y] = b.glue("p" + std::to_string(x) + std::to_string(y), 1);
  const GlueId addst[2] = {b.glue("a0", 1), b.glue("a1", 1)};
  const GlueId subst[2] = {b.glue("s0", 1), b.glue("s1", 1)};
  const GlueId tag[2][2] = {{b.glue("t0p", 1), b.glue("t0n", 1)},
                            {b.glue("t1p", 1), b.glue("t1n", 1)}};
  const GlueId s7 = b.glue("s7", 1);
  const GlueId mode[2] = {b.glue("cg", 1), b.glue("ig", 1)};  // copy / invert
  const GlueId topch = b.glue("t", 1);

  // Plus and minus adder tiles; pair glue is (operand, running).
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int c = 0; c < 2; ++c) {
        int s = x ^ y ^ c;
        b.tile("s" + std::to_string(s), "comp-add", "gray", bit[s], addst[c],
               pairg[x][y], addst[(x & y) | (y & c) | (c & x)]);
        int br = (((1 - y) & x) | ((1 - y) & c) | (x & c)) & 1;
        b.tile("d" + std::to_string(s), "comp-sub", "gray", bit[s], subst[c],
               pairg[x][y], subst[br]);
      }

  // Sign scan row: the west column latches the mode, the rest follow it.
  b.tile("g0", "finalize-msb", "yellow", tag[0][0], mode[0], bit[0], s7);
  b.tile("g1", "finalize-msb", "yellow", tag[0][1], mode[1], bit[1], s7);
  for (int u = 0; u < 2; ++u) {
    b.tile("f" + std::to_string(u), "comp-other", "gray", tag[u][0], mode[0],
           bit[u], mode[0]);
    b.tile("f" + std::to_string(1 - u), "comp-other", "gray", tag[1 - u][1],
           mode[1], bit[u], mode[1]);
  }

  auto inglue = [&](int j, int i) {
    return b.glue("in" + std::to_string(j) + "_" + std::to_string(i), 1);
  };
  for (int j = 3; j <= n; ++j)
    for (int x = 1; x <= w; ++x) {
      int alpha = bit_of(spec.terms[j - 1].magnitude, w - x);
      for (int u = 0; u < 2; ++u)
        b.tile("i" + std::to_string(alpha), "input", "green", pairg[alpha][u],
               inglue(j, x), bit[u], inglue(j, x - 1));
    }

  // Correction pairing row: +1 at the least significant column on the
  // negative path, +0 everywhere else.
  auto f8 = [&](int i) { return b.glue("f8_" + std::to_string(i), 1); };
  for (int x = 1; x <= w; ++x)
    for (int u = 0; u < 2; ++u)
      for (int neg = 0; neg < 2; ++neg) {
        int cst = (neg && x == w) ? 1 : 0;
        b.tile("i" + std::to_string(cst), "input", "green", pairg[cst][u],
               f8(x), tag[u][neg], f8(x - 1));
      }

  const int y_msb = 2 * n - 2;
  const int y_mag = 2 * n;
  auto lglue = [&](int y) { return b.glue("L" + std::to_string(y), 1); };
  auto rglue = [&](int y, int strength) {
    return b.glue("R" + std::to_string(y), strength);
  };
  const GlueId go7 = b.glue("go7", 2);

  // Seed row.
  TileId bl = b.tile("BL", "corner", "blue", lglue(1), 0, 0, 0);
  TileId br = b.tile("BR", "corner", "blue", rglue(1, 2), 0, 0, 0);
  b.place(0, 0, bl);
  b.place(w + 1, 0, br);
  for (int x = 1; x <= w; ++x) {
    int a1 = bit_of(spec.terms[0].magnitude, w - x);
    int a2 = bit_of(spec.terms[1].magnitude, w - x);
    TileId t = b.tile("i" + std::to_string(a2), "input", "green",
                      pairg[a2][a1], 0, 0, 0);
    b.place(x, 0, t);
  }

  // Frames for the operation and pairing rows.
  for (int k = 1; k <= n - 1; ++k) {
    int y = 2 * k - 1;
    bool minus = spec.terms[k].sign < 0;
    const GlueId* stream = minus ? subst : addst;
    GlueId north = y + 1 == y_msb ? rglue(y + 1, 1) : rglue(y + 1, 2);
    b.tile("ER", "right-frame", "slate", north, 0, rglue(y, 2), stream[0]);
    GlueId lnorth = y + 1 == y_msb ? go7 : lglue(y + 1);
    for (int c = 0; c < 2; ++c)
      b.tile("LF", "left-frame", "slate", lnorth, stream[c], lglue(y), 0);
  }
  for (int j = 3; j <= n; ++j) {
    int y = 2 * (j - 2);
    b.tile("SR", "right-frame", "slate", rglue(y + 1, 2), 0, rglue(y, 2),
           inglue(j, w));
    b.tile("LF", "left-frame", "slate", lglue(y + 1), inglue(j, 0), lglue(y), 0);
  }

  // Finalization frames: the scan row grows west to east from the left
  // frame; its east end tells the right frame which path was taken.
  b.tile("LF7", "left-frame", "slate", lglue(y_msb + 1), s7, go7, 0);
  for (int g = 0; g < 2; ++g)
    b.tile("RF7", "right-frame", "slate", rglue(y_msb + 1, 2), 0,
           rglue(y_msb, 1), mode[g]);
  b.tile("RF8", "right-frame", "slate", rglue(y_msb + 2, 2), 0,
         rglue(y_msb + 1, 2), f8(w));
  b.tile("LF8", "left-frame", "slate", lglue(y_msb + 2), f8(0),
         lglue(y_msb + 1), 0);
  GlueId r9north = b.glue(with_mod ? "dv" : "Rtop", 2);
  b.tile("RF9", "right-frame", "slate", r9north, 0, rglue(y_msb + 2, 2),
         addst[0]);
  GlueId l9north = b.glue(with_mod ? "Ldp" : "Lmag", 1);
  b.tile("LF9", "left-frame", "slate", l9north, addst[0], lglue(y_msb + 2), 0);

  if (!with_mod) {
    b.tile("TR", "corner", "blue", 0, 0, r9north, topch);
    for (int u = 0; u < 2; ++u)
      b.tile("T" + std::to_string(u), "top-frame", "slate", 0, topch, bit[u],
             topch);
    b.tile("TL", "corner", "blue", 0, topch, l9north, 0);
  } else {
    // Division region: pair with t, compare, then subtract or strip.
    const GlueId eq = b.glue("eq", 1);
    const GlueId lt = b.glue("lt", 1);
    const GlueId gt = b.glue("gt", 1);
    auto dp = [&](int i) { return b.glue("dp" + std::to_string(i), 1); };
    const GlueId cmpgo = b.glue("cmpgo", 2);
    const GlueId subgo = b.glue("subgo", 2);
    const GlueId stripgo = b.glue("stripgo", 2);
    const GlueId copygo = b.glue("copygo", 2);
    const GlueId divgo = b.glue("dv", 2);
    const GlueId Ldp = b.glue("Ldp", 1);
    const GlueId Lc = b.glue("Lc", 1);
    const GlueId Rdp = b.glue("Rdp", 1);
    const GlueId Rs = b.glue("Rs", 1);
    const GlueId cc = b.glue("cc", 1);
    const GlueId sc = b.glue("sc", 1);

    for (int x = 1; x <= w; ++x) {
      int tb = bit_of(t_mod, w - x);
      for (int u = 0; u < 2; ++u)
        b.tile("i" + std::to_string(tb), "input", "green", pairg[tb][u], dp(x),
               bit[u], dp(x - 1));
    }
    const GlueId states[3] = {eq, lt, gt};
    for (int tb = 0; tb < 2; ++tb)
      for (int rb = 0; rb < 2; ++rb)
        for (int s = 0; s < 3; ++s) {
          GlueId outcome = states[s];
          if (s == 0 && rb != tb) outcome = rb > tb ? gt : lt;
          b.tile("c" + std::to_string(rb), "comparator", "cyan",
                 pairg[tb][rb], outcome, pairg[tb][rb], states[s]);
        }
    for (int u = 0; u < 2; ++u)
      b.tile("y" + std::to_string(u), "div-copy", "gray", bit[u], cc, bit[u],
             cc);
    for (int tb = 0; tb < 2; ++tb)
      for (int rb = 0; rb < 2; ++rb)
        b.tile("q" + std::to_string(rb), "remainder", rb ? "red" : "white", 0,
               sc, pairg[tb][rb], sc);

    b.tile("RFdp", "right-frame", "slate", Rdp, 0, divgo, dp(w));
    b.tile("LFdp", "left-frame", "slate", cmpgo, dp(0), Ldp, 0);
    b.tile("LFcmp", "left-frame", "slate", Lc, eq, cmpgo, 0);
    b.tile("RFge", "right-frame", "slate", subgo, 0, Rdp, gt);
    b.tile("RFeq", "right-frame", "slate", subgo, 0, Rdp, eq);
    b.tile("RFlt", "right-frame", "slate", stripgo, 0, Rdp, lt);
    b.tile("RFsub", "right-frame", "slate", Rs, 0, subgo, subst[0]);
    b.tile("LFsub", "left-frame", "slate", copygo, subst[0], Lc, 0);
    b.tile("LFcp", "left-frame", "slate", Ldp, cc, copygo, 0);
    b.tile("RFcp", "right-frame", "slate", divgo, 0, Rs, cc);
    b.tile("RFstrip", "right-frame", "slate", 0, 0, stripgo, sc);
    b.tile("LFstrip", "left-frame", "slate", 0, sc, Lc, 0);
  }

  CompiledSystem out{b.take(), {}};
  Layout& lay = out.layout;
  lay.kind = with_mod ? ExprKind::SignedMod : ExprKind::Signed;
  lay.width = w;
  lay.x_lo = 1;
  lay.x_hi = w;
  lay.sign_probe = {1, y_msb};
  for (const TileType& t : out.system.tiles) {
    if (t.family == "finalize-msb") lay.sign_tiles[t.id] = t.label == "g1" ? -1 : +1;
    if (!with_mod && t.family == "comp-add")
      lay.result_bits[t.id] = t.label == "s1" ? 1 : 0;
    if (with_mod && t.family == "remainder")
      lay.result_bits[t.id] = t.label == "q1" ? 1 : 0;
  }
  lay.result_row = with_mod ? -1 : y_mag;
  long rows;
  if (!with_mod) {
    rows = 2 * n + 2;
  } else {
    rows = 2 * n + 1 + 4 * static_cast<long>(plan.quotient) + 3;
  }
  lay.expected_area = static_cast<long>(w + 2) * rows;
  lay.counts = {
      {"comp-add", 8, -1},
      {"comp-sub", 8, -1},
      {"comp-other", 4, static_cast<long>(w) - 1},
      {"finalize-msb", 2, 1},
      {"corner", with_mod ? 2 : 4, with_mod ? 2 : 4},
      {"input",
       static_cast<long>(w) + 2L * w * (n - 2) + 4L * w + (with_mod ? 2L * w : 0),
       -1},
  };
  if (with_mod) {
    lay.counts.push_back({"comparator", 12, -1});
    lay.counts.push_back({"remainder", 4, w});
    lay.counts.push_back({"div-copy", 2, -1});
  } else {
    lay.counts.push_back({"top-frame", 2, w});
  }
  return out;
}

CompiledSystem compile_addsub(const SignedExpressionSpec& spec) {
  if (spec.modulus)
    throw CompileError("use compile_modexpr for modular expressions");
  return compile_signed_impl(spec, false);
}

CompiledSystem compile_modexpr(const SignedExpressionSpec& spec) {
  return compile_signed_impl(spec, true);
}

}  // namespace tilearith
