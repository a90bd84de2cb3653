#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "tilearith/compile.hpp"
#include "tilearith/decode.hpp"
#include "tilearith/sim.hpp"

using namespace tilearith;

namespace {

std::uint64_t oracle_sum(const std::vector<std::uint64_t>& xs) {
  std::uint64_t s = 0;
  for (std::uint64_t x : xs) s += x;
  return s;
}

DecodedResult run_add(const std::vector<std::uint64_t>& xs, AddVariant v) {
  CompiledSystem c = compile_add8({xs, v});
  SimulationReport r = grow(c.system, c.layout.default_max_steps());
  REQUIRE(r.halted);
  REQUIRE(r.deterministic);
  return decode(c.layout, c.system, r.terminal);
}

}  // namespace

TEST_CASE("encode_input: bit rows in both reading orientations") {
  // 12 = 1100 in binary, padded to 7 bits, least significant bit first.
  CHECK(encode_input(12, 7, BitOrientation::RightToLeft) ==
        std::vector<int>{0, 0, 1, 1, 0, 0, 0});
  CHECK(encode_input(0, 5, BitOrientation::LeftToRight) ==
        std::vector<int>{0, 0, 0, 0, 0});
  CHECK(encode_input(0, 5, BitOrientation::RightToLeft) ==
        std::vector<int>{0, 0, 0, 0, 0});
  // One orientation is the reversal of the other.
  std::vector<int> rtl = encode_input(6, 7, BitOrientation::RightToLeft);
  std::vector<int> reversed = rtl;
  std::reverse(reversed.begin(), reversed.end());
  CHECK(encode_input(6, 7, BitOrientation::LeftToRight) == reversed);
  CHECK_THROWS_AS(encode_input(16, 4, BitOrientation::LeftToRight),
                  CompileError);
}

TEST_CASE("add8: 12+6+2+4 reproduces the worked example") {
  CompiledSystem c = compile_add8({{12, 6, 2, 4}, AddVariant::EightTile});
  SimulationReport r = grow(c.system, c.layout.default_max_steps());
  REQUIRE(r.halted);
  REQUIRE(r.deterministic);

  DecodedResult d = decode(c.layout, c.system, r.terminal);
  CHECK(d.value == 24);

  // The sixth row carries 24 = 0011000 in binary, most significant to the
  // west.
  std::vector<int> bits;
  for (int x = c.layout.x_lo; x <= c.layout.x_hi; ++x) {
    TileId t = *r.terminal.at({x, c.layout.result_row});
    bits.push_back(c.layout.result_bits.at(t));
  }
  CHECK(bits == std::vector<int>{0, 0, 1, 1, 0, 0, 0});
  CHECK(c.layout.result_row == 5);  // sixth row, above five rows of work

  // The seed row reads 12 from the right side.
  std::vector<int> a1_bits;
  for (int x = c.layout.x_hi; x >= c.layout.x_lo; --x) {
    const TileType& t = c.system.tile(*r.terminal.at({x, 0}));
    a1_bits.push_back(t.label.at(2) - '0');
  }
  CHECK(a1_bits == encode_input(12, 7, BitOrientation::RightToLeft));
}

TEST_CASE("add8: usage counts match the reference enumeration") {
  CompiledSystem c = compile_add8({{12, 6, 2, 4}, AddVariant::EightTile});
  SimulationReport r = grow(c.system, c.layout.default_max_steps());
  REQUIRE(r.halted);
  CHECK(family_usage(c.system, r.terminal, "left-frame") == 5);
  CHECK(family_usage(c.system, r.terminal, "corner") == 4);
  CHECK(family_usage(c.system, r.terminal, "right-frame") == 5);
  CHECK(family_usage(c.system, r.terminal, "top-frame") == 7);
  CHECK(family_usage(c.system, r.terminal, "input") == 21);
  CHECK(family_usage(c.system, r.terminal, "computational") == 14);
}

TEST_CASE("add8: trivial and oracle-checked sums") {
  CHECK(run_add({0, 0}, AddVariant::EightTile).value == 0);
  CHECK(oracle_sum({7, 9, 1}) == 17);
  CHECK(run_add({7, 9, 1}, AddVariant::EightTile).value == 17);
  CHECK(run_add({7, 9, 1}, AddVariant::SixTile).value == 17);
}

TEST_CASE("add8: an all-zero result row of width seven decodes to zero") {
  std::vector<std::uint64_t> zeros(7, 0);  // n=7, m=1, so width 7
  CompiledSystem c = compile_add8({zeros, AddVariant::EightTile});
  CHECK(c.layout.width == 7);
  SimulationReport r = grow(c.system, c.layout.default_max_steps());
  REQUIRE(r.halted);
  DecodedResult d = decode(c.layout, c.system, r.terminal);
  CHECK(d.value == 0);
  for (const Pos& p : d.read_region)
    CHECK(c.layout.result_bits.at(*r.terminal.at(p)) == 0);
}

TEST_CASE("add8: overall counts follow the closed forms for n=2..6, m=1..6") {
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m <= 6; ++m) {
      std::vector<std::uint64_t> inputs;
      inputs.push_back(m == 1 ? 1 : (1ull << (m - 1)) + 1);  // bit length m
      for (int i = 1; i < n; ++i) inputs.push_back(i % 2);
      CAPTURE(n);
      CAPTURE(m);
      CompiledSystem c = compile_add8({inputs, AddVariant::EightTile});
      SimulationReport r = grow(c.system, c.layout.default_max_steps());
      REQUIRE(r.halted);
      REQUIRE(r.deterministic);
      long w = n + m - 1;
      CHECK(family_usage(c.system, r.terminal, "left-frame") == 2 * n - 3);
      CHECK(family_usage(c.system, r.terminal, "corner") == 4);
      CHECK(family_usage(c.system, r.terminal, "right-frame") == 2 * n - 3);
      CHECK(family_usage(c.system, r.terminal, "top-frame") == w);
      CHECK(family_usage(c.system, r.terminal, "input") == w * (n - 1));
      CHECK(family_usage(c.system, r.terminal, "computational") == w * (n - 2));
      CHECK(decode(c.layout, c.system, r.terminal).value ==
            static_cast<std::int64_t>(oracle_sum(inputs)));
    }
}

TEST_CASE("add8: generated type counts match expected_tile_counts") {
  ExpressionSpec spec;
  spec.kind = ExprKind::Add;
  spec.add = {{12, 6, 2, 4}, AddVariant::EightTile};
  CompiledSystem c = compile(spec);
  auto counts = expected_tile_counts(spec);
  for (const FamilyCount& fc : counts)
    CHECK(family_types(c.system, fc.family) == fc.types);
  // Spot values from the count table, n=4 and m=4.
  auto find = [&](const std::string& f) {
    for (const FamilyCount& fc : counts)
      if (fc.family == f) return fc;
    return FamilyCount{};
  };
  CHECK(find("computational").overall == 14);
  CHECK(find("input").overall == 21);
  CHECK(find("top-frame").overall == 7);
  CHECK(find("computational").types == 8);
}

TEST_CASE("add8: six-tile variant merges the mixed bit pairs") {
  CompiledSystem c = compile_add8({{12, 6, 2, 4}, AddVariant::SixTile});
  CHECK(family_types(c.system, "computational") == 6);
  CHECK(family_types(c.system, "result") == 6);
  SimulationReport r = grow(c.system, c.layout.default_max_steps());
  REQUIRE(r.halted);
  REQUIRE(r.deterministic);
  CHECK(decode(c.layout, c.system, r.terminal).value == 24);
  CHECK(family_usage(c.system, r.terminal, "computational") == 14);
}

TEST_CASE("add8: full adder truth table on the computational tiles") {
  CompiledSystem c = compile_add8({{12, 6, 2, 4}, AddVariant::EightTile});
  const TileSystem& sys = c.system;
  auto glue_name = [&](GlueId g) { return sys.glue(g).name; };
  int checked = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int cin = 0; cin < 2; ++cin) {
        std::string south = "add8:p" + std::to_string(a) + std::to_string(b);
        std::string east = "add8:c" + std::to_string(cin);
        for (const TileType& t : sys.tiles) {
          if (t.family != "computational") continue;
          if (glue_name(t.edge(Dir::South)) != south) continue;
          if (glue_name(t.edge(Dir::East)) != east) continue;
          int s = a ^ b ^ cin;
          int cout = (a & b) | (b & cin) | (cin & a);
          CHECK(glue_name(t.edge(Dir::North)) == "add8:b" + std::to_string(s));
          CHECK(glue_name(t.edge(Dir::West)) == "add8:c" + std::to_string(cout));
          ++checked;
        }
      }
  CHECK(checked == 8);
}

TEST_CASE("add8: n=2 degenerates to one result row and no computational tiles") {
  CompiledSystem c = compile_add8({{12, 6}, AddVariant::EightTile});
  CHECK(family_types(c.system, "computational") == 0);
  SimulationReport r = grow(c.system, c.layout.default_max_steps());
  REQUIRE(r.halted);
  CHECK(decode(c.layout, c.system, r.terminal).value == 18);
  CHECK(family_usage(c.system, r.terminal, "computational") == 0);
}

TEST_CASE("add8: fewer than two inputs is an arity error") {
  CHECK_THROWS_AS(compile_add8({{5}, AddVariant::EightTile}), CompileError);
  CHECK_THROWS_AS(compile_add8({{}, AddVariant::EightTile}), CompileError);
}
