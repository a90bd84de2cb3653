#include "tilearith/sim.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace tilearith {

namespace {

// Tiles keyed by (direction, glue name) so a frontier site only examines
// candidates that can actually bond with one of its neighbours.
struct CandidateIndex {
  std::map<std::string, GlueId> canon;          // glue name -> representative
  std::map<std::pair<int, GlueId>, std::vector<TileId>> by_edge;

  explicit CandidateIndex(const TileSystem& sys) {
    for (GlueId g = 1; g < static_cast<GlueId>(sys.glues.size()); ++g)
      canon.emplace(sys.glues[g].name, g);
    for (const TileType& t : sys.tiles)
      for (Dir d : kDirs) {
        GlueId g = t.edge(d);
        if (g == 0 || sys.glue(g).strength == 0) continue;
        by_edge[{static_cast<int>(d), canon.at(sys.glue(g).name)}].push_back(t.id);
      }
  }

  // Tile ids that might bind at p; a superset filtered by binding_strength.
  std::vector<TileId> candidates(const TileSystem& sys, const Assembly& asm_,
                                 Pos p) const {
    std::vector<TileId> out;
    for (Dir d : kDirs) {
      auto neighbour = asm_.at(step(p, d));
      if (!neighbour) continue;
      GlueId facing = sys.tile(*neighbour).edge(opposite(d));
      if (facing == 0 || sys.glue(facing).strength == 0) continue;
      auto it = by_edge.find(
          {static_cast<int>(d), canon.at(sys.glue(facing).name)});
      if (it == by_edge.end()) continue;
      for (TileId t : it->second)
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    return out;
  }
};

struct Front {
  const CandidateIndex& index;
  std::map<Pos, std::vector<TileId>> sites;
  std::deque<Pos> discovery;  // in first-discovery order; may hold stale entries

  void refresh(const TileSystem& sys, const Assembly& asm_, Pos p) {
    if (asm_.occupied(p)) {
      sites.erase(p);
      return;
    }
    std::vector<TileId> ids;
    for (TileId t : index.candidates(sys, asm_, p))
      if (binding_strength(sys, asm_, p, t) >= sys.temperature)
        ids.push_back(t);
    std::sort(ids.begin(), ids.end());
    if (ids.empty()) {
      sites.erase(p);
    } else {
      bool fresh = sites.find(p) == sites.end();
      sites[p] = std::move(ids);
      if (fresh) discovery.push_back(p);
    }
  }

  Pos select(FrontierOrder order) {
    if (order == FrontierOrder::Lex) return sites.begin()->first;
    if (order == FrontierOrder::Fifo) {
      while (!discovery.empty() && !sites.count(discovery.front()))
        discovery.pop_front();
      return discovery.front();
    }
    while (!discovery.empty() && !sites.count(discovery.back()))
      discovery.pop_back();
    return discovery.back();
  }
};

}  // namespace

SimulationReport grow(const TileSystem& sys, long max_steps,
                      FrontierOrder order) {
  if (max_steps < 1) throw ValidationError("max_steps must be positive");
  sys.validate();

  SimulationReport report;
  report.terminal = sys.seed;

  CandidateIndex index(sys);
  Front front{index, {}, {}};
  for (const auto& [p, _] : sys.seed.placements)
    for (Dir d : kDirs) front.refresh(sys, report.terminal, step(p, d));

  while (!front.sites.empty()) {
    if (report.steps >= max_steps) {
      report.halted = false;
      return report;
    }
    Pos site = front.select(order);
    const std::vector<TileId>& ids = front.sites.at(site);
    if (ids.size() > 1) report.deterministic = false;
    TileId chosen = ids.front();
    report.terminal.placements[site] = chosen;
    report.trace.push_back({site, chosen});
    ++report.steps;
    front.sites.erase(site);
    for (Dir d : kDirs) front.refresh(sys, report.terminal, step(site, d));
  }
  report.halted = true;
  return report;
}

Assembly replay(const TileSystem& sys, const std::vector<Attachment>& trace) {
  Assembly asm_ = sys.seed;
  for (size_t i = 0; i < trace.size(); ++i) {
    const Attachment& a = trace[i];
    std::string where = "trace step " + std::to_string(i);
    if (asm_.occupied(a.pos))
      throw InvalidTraceError(where + ": position already occupied");
    if (a.tile < 0 || a.tile >= static_cast<TileId>(sys.tiles.size()))
      throw InvalidTraceError(where + ": unknown tile id");
    if (binding_strength(sys, asm_, a.pos, a.tile) < sys.temperature)
      throw InvalidTraceError(where + ": binding strength below temperature");
    asm_.placements[a.pos] = a.tile;
  }
  return asm_;
}

std::string dump_trace(const std::vector<Attachment>& trace) {
  std::ostringstream out;
  for (size_t i = 0; i < trace.size(); ++i)
    out << "attach " << i << " " << trace[i].pos.x << " " << trace[i].pos.y
        << " " << trace[i].tile << "\n";
  return out.str();
}

}  // namespace tilearith
