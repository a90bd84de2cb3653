#include "tilearith/compile.hpp"

#include <algorithm>

namespace tilearith {

const char* kind_name(ExprKind k) {
  switch (k) {
    case ExprKind::Add: return "add";
    case ExprKind::Mul: return "mul";
    case ExprKind::Signed: return "addsub";
    case ExprKind::SignedMod: return "mod";
    case ExprKind::Prime: return "prime";
  }
  return "?";
}

int bit_length(std::uint64_t v) {
  int n = 1;
  while (v > 1) {
    v >>= 1;
    ++n;
  }
  return n;
}

std::vector<int> encode_input(std::uint64_t value, int width,
                              BitOrientation orientation) {
  if (width < 1) throw CompileError("encode_input: width must be positive");
  if (width < 64 && (value >> width) != 0)
    throw CompileError("encode_input: value does not fit in " +
                       std::to_string(width) + " bits");
  std::vector<int> row(width);
  for (int i = 0; i < width; ++i)
    row[i] = static_cast<int>((value >> i) & 1);  // index = significance
  if (orientation == BitOrientation::LeftToRight)
    std::reverse(row.begin(), row.end());
  return row;
}

long family_usage(const TileSystem& sys, const Assembly& asm_,
                  const std::string& family) {
  long n = 0;
  for (const auto& [_, t] : asm_.placements)
    if (sys.tile(t).family == family) ++n;
  return n;
}

long family_types(const TileSystem& sys, const std::string& family) {
  long n = 0;
  for (const TileType& t : sys.tiles)
    if (t.family == family) ++n;
  return n;
}

CompiledSystem compile(const ExpressionSpec& spec) {
  switch (spec.kind) {
    case ExprKind::Add:
      return spec.add.variant == AddVariant::LType ? compile_addL(spec.add)
                                                   : compile_add8(spec.add);
    case ExprKind::Mul: return compile_mul(spec.mul);
    case ExprKind::Signed: return compile_addsub(spec.sig);
    case ExprKind::SignedMod: return compile_modexpr(spec.sig);
    case ExprKind::Prime: return compile_prime(spec.prime);
  }
  throw CompileError("unknown expression kind");
}

}  // namespace tilearith

namespace tilearith {

std::vector<FamilyCount> expected_tile_counts(const ExpressionSpec& spec) {
  return compile(spec).layout.counts;
}

}  // namespace tilearith
