#include <doctest.h>

#include <algorithm>

#include "tilearith/compile.hpp"
#include "tilearith/sim.hpp"

using namespace tilearith;

namespace {

TileSystem one_attachment_system() {
  TileSystem sys;
  sys.name = "threeseed";
  sys.glues = {{"", 0}, {"a1", 2}, {"h1", 1}, {"h2", 1}};
  auto tile = [&](TileId id, GlueId n, GlueId e, GlueId s, GlueId w) {
    TileType t;
    t.id = id;
    t.label = "t" + std::to_string(id);
    t.edges[0] = n;
    t.edges[1] = e;
    t.edges[2] = s;
    t.edges[3] = w;
    return t;
  };
  sys.tiles = {tile(0, 0, 2, 0, 0), tile(1, 0, 3, 0, 2), tile(2, 0, 1, 0, 3),
               tile(3, 0, 0, 0, 1)};
  sys.seed.placements = {{{0, 0}, 0}, {{1, 0}, 1}, {{2, 0}, 2}};
  return sys;
}

}  // namespace

TEST_CASE("grow: one tile attaches to the three-tile seed") {
  TileSystem sys = one_attachment_system();
  SimulationReport r = grow(sys, 100);
  CHECK(r.halted);
  CHECK(r.deterministic);
  CHECK(r.steps == 1);
  CHECK(r.terminal.placements.size() == 4);
  CHECK(r.terminal.at({3, 0}) == 3);
  CHECK(r.steps == static_cast<long>(r.trace.size()));
}

TEST_CASE("grow: terminal seed halts with zero steps") {
  TileSystem sys = one_attachment_system();
  sys.glues[1].strength = 1;
  SimulationReport r = grow(sys, 100);
  CHECK(r.halted);
  CHECK(r.steps == 0);
  CHECK(r.terminal.placements == sys.seed.placements);
}

TEST_CASE("grow: 12+6+2+4 halts with 14 computational attachments") {
  CompiledSystem c = compile_add8({{12, 6, 2, 4}, AddVariant::EightTile});
  SimulationReport r = grow(c.system, c.layout.default_max_steps());
  CHECK(r.halted);
  CHECK(r.deterministic);
  long comp = 0;
  for (const Attachment& a : r.trace)
    if (c.system.tile(a.tile).family == "computational") ++comp;
  CHECK(comp == 14);
  // Seven rows in total.
  auto [lo, hi] = r.terminal.bounds();
  CHECK(hi.y - lo.y + 1 == 7);
  CHECK(r.steps ==
        static_cast<long>(r.terminal.placements.size() - c.system.seed.placements.size()));
}

TEST_CASE("grow: exhausted step budget reports halted=false") {
  CompiledSystem c = compile_add8({{12, 6, 2, 4}, AddVariant::EightTile});
  SimulationReport r = grow(c.system, 3);
  CHECK(!r.halted);
  CHECK(r.steps == 3);
}

TEST_CASE("grow: flags a nondeterministic site and keeps growing") {
  TileSystem sys;
  sys.glues = {{"", 0}, {"a", 2}};
  TileType seed, t1, t2;
  seed.id = 0;
  seed.label = "s";
  seed.edges[1] = 1;  // east a, strength 2
  t1.id = 1;
  t1.label = "x";
  t1.edges[3] = 1;
  t2.id = 2;
  t2.label = "y";
  t2.edges[3] = 1;
  sys.tiles = {seed, t1, t2};
  sys.seed.placements = {{{0, 0}, 0}};
  SimulationReport r = grow(sys, 10);
  CHECK(r.halted);
  CHECK(!r.deterministic);
  CHECK(r.steps == 1);
}

TEST_CASE("grow: malformed system is rejected before any growth") {
  TileSystem sys = one_attachment_system();
  sys.temperature = 0;
  CHECK_THROWS_AS(grow(sys, 10), ValidationError);
}

TEST_CASE("replay: a grow trace reproduces the terminal assembly") {
  CompiledSystem c = compile_add8({{7, 9, 1}, AddVariant::EightTile});
  SimulationReport r = grow(c.system, c.layout.default_max_steps());
  Assembly again = replay(c.system, r.trace);
  CHECK(again.placements == r.terminal.placements);
}

TEST_CASE("replay: empty trace returns the seed") {
  CompiledSystem c = compile_add8({{3, 1}, AddVariant::EightTile});
  Assembly a = replay(c.system, {});
  CHECK(a.placements == c.system.seed.placements);
}

TEST_CASE("replay: reordering an attachment before its support fails") {
  CompiledSystem c = compile_add8({{12, 6}, AddVariant::EightTile});
  SimulationReport r = grow(c.system, c.layout.default_max_steps());
  REQUIRE(r.trace.size() >= 2);
  // Move the final attachment first: its supports are not yet placed.
  std::vector<Attachment> bad;
  bad.push_back(r.trace.back());
  bad.insert(bad.end(), r.trace.begin(), r.trace.end() - 1);
  CHECK_THROWS_AS(replay(c.system, bad), InvalidTraceError);
  // The error message names the failing step.
  try {
    replay(c.system, bad);
  } catch (const InvalidTraceError& e) {
    CHECK(std::string(e.what()).find("step 0") != std::string::npos);
  }
}

TEST_CASE("replay: every grow attachment met the temperature when placed") {
  // Trace-replay invariant behind the simulator: prefix replays never throw.
  CompiledSystem c = compile_mul({{5, 4, 3}});
  SimulationReport r = grow(c.system, c.layout.default_max_steps());
  REQUIRE(r.halted);
  CHECK(replay(c.system, r.trace).placements == r.terminal.placements);
}

TEST_CASE("confluence: frontier orders agree on deterministic systems") {
  CompiledSystem c = compile_add8({{12, 6, 2, 4}, AddVariant::EightTile});
  long budget = c.layout.default_max_steps();
  SimulationReport lex = grow(c.system, budget, FrontierOrder::Lex);
  SimulationReport fifo = grow(c.system, budget, FrontierOrder::Fifo);
  SimulationReport lifo = grow(c.system, budget, FrontierOrder::Lifo);
  CHECK(lex.halted);
  CHECK(fifo.halted);
  CHECK(lifo.halted);
  CHECK(lex.terminal.placements == fifo.terminal.placements);
  CHECK(lex.terminal.placements == lifo.terminal.placements);
}

TEST_CASE("trace dump format") {
  std::vector<Attachment> trace = {{{3, 0}, 7}, {{-1, 2}, 0}};
  CHECK(dump_trace(trace) == "attach 0 3 0 7\nattach 1 -1 2 0\n");
}

TEST_CASE("trace dump: golden trace for 12+6") {
  // Lex order is (y, then x) lowest first, so the growth transcript is
  // reproducible byte for byte.
  CompiledSystem c = compile_add8({{12, 6}, AddVariant::EightTile});
  SimulationReport r = grow(c.system, c.layout.default_max_steps());
  REQUIRE(r.halted);
  std::string first_lines;
  {
    std::string all = dump_trace(r.trace);
    size_t pos = 0;
    for (int i = 0; i < 3 && pos != std::string::npos; ++i)
      pos = all.find('\n', pos + 1);
    first_lines = all.substr(0, pos == std::string::npos ? all.size() : pos + 1);
  }
  // Right frame first (strength-2 chain), then the result row zips east to
  // west from the injected carry.
  CHECK(first_lines ==
        "attach 0 6 1 15\n"
        "attach 1 5 1 0\n"
        "attach 2 4 1 4\n");
  CHECK(dump_trace(grow(c.system, c.layout.default_max_steps()).trace) ==
        dump_trace(r.trace));
}
