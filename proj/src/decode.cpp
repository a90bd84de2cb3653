#include "tilearith/decode.hpp"

#include <set>

namespace tilearith {

namespace {

// Reads the bit row at `row`, most significant at x_lo.
std::int64_t read_row(const Layout& lay, const TileSystem& sys,
                      const Assembly& asm_, int row, std::vector<Pos>* region) {
  std::int64_t value = 0;
  for (int x = lay.x_lo; x <= lay.x_hi; ++x) {
    auto t = asm_.at({x, row});
    if (!t)
      throw DecodeError("result row incomplete at x=" + std::to_string(x));
    if (!lay.result_bits.count(*t))
      throw DecodeError("tile `" + sys.tile(*t).label + "` at x=" +
                        std::to_string(x) + " carries no result bit");
    value |= static_cast<std::int64_t>(lay.result_bits.at(*t))
             << (lay.x_hi - x);
    region->push_back({x, row});
  }
  return value;
}

int find_result_row(const Layout& lay, const Assembly& asm_) {
  std::set<int> rows;
  for (const auto& [p, t] : asm_.placements)
    if (lay.result_bits.count(t)) rows.insert(p.y);
  if (rows.empty()) throw DecodeError("no result tiles in terminal assembly");
  if (rows.size() > 1) throw DecodeError("result tiles span multiple rows");
  return *rows.begin();
}

int read_sign(const Layout& lay, const Assembly& asm_,
              std::vector<Pos>* region) {
  auto t = asm_.at(lay.sign_probe);
  if (!t || !lay.sign_tiles.count(*t))
    throw DecodeError("sign marker missing from terminal assembly");
  region->push_back(lay.sign_probe);
  return lay.sign_tiles.at(*t);
}

}  // namespace

DecodedResult decode(const Layout& lay, const TileSystem& sys,
                     const Assembly& terminal) {
  DecodedResult out;
  out.kind = lay.kind;
  switch (lay.kind) {
    case ExprKind::Add:
    case ExprKind::Mul:
      out.value = read_row(lay, sys, terminal, lay.result_row, &out.read_region);
      break;
    case ExprKind::Signed: {
      std::int64_t mag =
          read_row(lay, sys, terminal, lay.result_row, &out.read_region);
      out.sign = read_sign(lay, terminal, &out.read_region);
      out.value = out.sign < 0 ? -mag : mag;
      break;
    }
    case ExprKind::SignedMod: {
      int row = find_result_row(lay, terminal);
      out.remainder = read_row(lay, sys, terminal, row, &out.read_region);
      out.sign = read_sign(lay, terminal, &out.read_region);
      break;
    }
    case ExprKind::Prime: {
      std::optional<bool> verdict;
      for (const auto& [p, t] : terminal.placements) {
        auto it = lay.verdict_tiles.find(t);
        if (it == lay.verdict_tiles.end()) continue;
        if (verdict && *verdict != it->second)
          throw DecodeError("conflicting primality verdict tiles");
        verdict = it->second;
        out.read_region.push_back(p);
      }
      if (!verdict) throw DecodeError("no verdict tiles in terminal assembly");
      out.prime = verdict;
      break;
    }
  }
  return out;
}

}  // namespace tilearith
