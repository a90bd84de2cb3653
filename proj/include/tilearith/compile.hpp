#pragma once

// Compilers from arithmetic specs to tile systems. Each compiler returns the
// system plus layout metadata: where the decoder reads the answer, how tile
// ids map to result bits, and the expected terminal geometry.

#include <map>
#include <string>
#include <vector>

#include "tilearith/core.hpp"
#include "tilearith/specs.hpp"

namespace tilearith {

struct CompileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BitOrientation { LeftToRight, RightToLeft };

// Zero-padded binary row of exactly `width` bits. LeftToRight lists bits
// most significant first; RightToLeft is its reversal (least significant
// first), i.e. the row reads as the usual binary string from the right.
std::vector<int> encode_input(std::uint64_t value, int width,
                              BitOrientation orientation);

struct FamilyCount {
  std::string family;
  long types = 0;    // tile types generated for this family
  long overall = 0;  // tiles of this family in the terminal assembly; -1 if
                     // input-dependent and not predicted in closed form
};

struct Layout {
  ExprKind kind = ExprKind::Add;
  int width = 0;          // interior bit columns
  int x_lo = 1;           // westmost interior column; significance = x_hi - x
  int x_hi = 0;           // eastmost interior column (least significant bit)
  int result_row = -1;    // y of the computed result row; -1 = locate result
                          // tiles by scanning for ids in result_bits
  std::map<TileId, int> result_bits;    // tile id -> bit it displays
  std::map<TileId, int> sign_tiles;     // tile id -> +1 / -1 (signed kinds)
  Pos sign_probe;                       // where the sign tile sits
  std::map<TileId, bool> verdict_tiles; // tile id -> prime? (primality)
  long expected_area = 0;               // terminal tile count
  std::vector<FamilyCount> counts;      // per-family generated/used counts

  long default_max_steps() const { return 16 * expected_area; }
};

struct CompiledSystem {
  TileSystem system;
  Layout layout;
};

CompiledSystem compile_add8(const AdditionSpec& spec);      // EightTile/SixTile
CompiledSystem compile_addL(const AdditionSpec& spec);      // LType
CompiledSystem compile_mul(const MultiplicationSpec& spec);
CompiledSystem compile_addsub(const SignedExpressionSpec& spec);  // no modulus
CompiledSystem compile_modexpr(const SignedExpressionSpec& spec); // with modulus
CompiledSystem compile_prime(const PrimalitySpec& spec);

CompiledSystem compile(const ExpressionSpec& spec);

// Closed-form per-family counts for a spec, matching what the compilers
// generate. `overall` carries closed-form usage where the construction has
// one (eight-tile addition fully; frame families elsewhere).
std::vector<FamilyCount> expected_tile_counts(const ExpressionSpec& spec);

// Tiles of `family` present in the assembly.
long family_usage(const TileSystem& sys, const Assembly& asm_,
                  const std::string& family);
// Tile types of `family` in the system.
long family_types(const TileSystem& sys, const std::string& family);

}  // namespace tilearith
