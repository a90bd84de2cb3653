#include <doctest.h>

#include "tilearith/compile.hpp"
#include "tilearith/decode.hpp"
#include "tilearith/sim.hpp"

using namespace tilearith;

namespace {

// Trial division over k = floor(n/2) ... 2, mirroring the tile loop.
bool oracle_prime(std::uint64_t n) {
  for (std::uint64_t k = n / 2; k >= 2; --k)
    if (n % k == 0) return false;
  return true;
}

struct PrimeRun {
  CompiledSystem compiled;
  SimulationReport report;
  bool verdict;
};

PrimeRun run_prime(std::uint64_t n) {
  PrimeRun run{compile_prime({n}), {}, false};
  run.report = grow(run.compiled.system, run.compiled.layout.default_max_steps());
  REQUIRE(run.report.halted);
  REQUIRE(run.report.deterministic);
  DecodedResult d =
      decode(run.compiled.layout, run.compiled.system, run.report.terminal);
  REQUIRE(d.prime.has_value());
  run.verdict = *d.prime;
  return run;
}

}  // namespace

TEST_CASE("prime: n=5 is prime and grows the twelve-row narrative") {
  PrimeRun run = run_prime(5);
  CHECK(run.verdict);
  auto [lo, hi] = run.report.terminal.bounds();
  CHECK(hi.y - lo.y + 1 == 12);
  CHECK(run.compiled.layout.expected_area ==
        static_cast<long>(run.report.terminal.placements.size()));
}

TEST_CASE("prime: n=2 never enters the loop body") {
  PrimeRun run = run_prime(2);
  CHECK(run.verdict);
  // input, converter, check, verdict
  auto [lo, hi] = run.report.terminal.bounds();
  CHECK(hi.y - lo.y + 1 == 4);
}

TEST_CASE("prime: composite and prime samples against trial division") {
  CHECK_FALSE(oracle_prime(9));  // 9 = 3 * 3, found at k = 3
  CHECK(oracle_prime(13));
  CHECK_FALSE(run_prime(9).verdict);
  CHECK(run_prime(13).verdict);
}

TEST_CASE("prime: fixed family type counts are always present") {
  for (std::uint64_t n : {2ull, 5ull, 9ull, 13ull, 36ull, 64ull}) {
    CAPTURE(n);
    CompiledSystem c = compile_prime({n});
    CHECK(family_types(c.system, "converter") == 4);
    CHECK(family_types(c.system, "check-gt1") == 12);
    CHECK(family_types(c.system, "check-cgb") == 24);
    CHECK(family_types(c.system, "rl-move") == 4);
    CHECK(family_types(c.system, "sub-ik") == 16);
    CHECK(family_types(c.system, "sub-k1") == 16);
  }
}

TEST_CASE("prime: subtraction rows follow the bitwise table") {
  // The same table as the signed expression subtractor, on the I track of
  // the (n, I, k) triple: minuend I, subtrahend k.
  const int table[8][5] = {
      {1, 1, 1, 1, 1}, {1, 1, 0, 0, 0}, {1, 0, 1, 0, 1}, {1, 0, 0, 1, 1},
      {0, 1, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 1}, {0, 0, 0, 0, 0},
  };
  CompiledSystem c = compile_prime({5});
  auto glue_name = [&](GlueId g) { return c.system.glue(g).name; };
  for (const auto& row : table) {
    int k = row[0], I = row[1], din = row[2], s = row[3], dout = row[4];
    for (int nn = 0; nn < 2; ++nn) {
      std::string south = "pr:T" + std::to_string(nn) + std::to_string(I) +
                          std::to_string(k);
      std::string east = "pr:d" + std::to_string(din);
      int found = 0;
      for (const TileType& t : c.system.tiles) {
        if (t.family != "sub-ik") continue;
        if (glue_name(t.edge(Dir::South)) != south) continue;
        if (glue_name(t.edge(Dir::East)) != east) continue;
        CHECK(glue_name(t.edge(Dir::North)) ==
              "pr:T" + std::to_string(nn) + std::to_string(s) +
                  std::to_string(k));
        CHECK(glue_name(t.edge(Dir::West)) == "pr:d" + std::to_string(dout));
        ++found;
      }
      CHECK(found == 1);
    }
  }
}

TEST_CASE("prime: exhaustive agreement with trial division on [2,40]") {
  for (std::uint64_t n = 2; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(run_prime(n).verdict == oracle_prime(n));
  }
}

TEST_CASE("prime: n below two is rejected") {
  CHECK_THROWS_AS(compile_prime({0}), CompileError);
  CHECK_THROWS_AS(compile_prime({1}), CompileError);
}
