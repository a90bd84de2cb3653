#include "tilearith/core.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

namespace tilearith {

Dir opposite(Dir d) {
  switch (d) {
    case Dir::North: return Dir::South;
    case Dir::East: return Dir::West;
    case Dir::South: return Dir::North;
    case Dir::West: return Dir::East;
  }
  return Dir::North;
}

Pos step(Pos p, Dir d) {
  switch (d) {
    case Dir::North: return {p.x, p.y + 1};
    case Dir::East: return {p.x + 1, p.y};
    case Dir::South: return {p.x, p.y - 1};
    case Dir::West: return {p.x - 1, p.y};
  }
  return p;
}

std::optional<TileId> Assembly::at(Pos p) const {
  auto it = placements.find(p);
  if (it == placements.end()) return std::nullopt;
  return it->second;
}

bool Assembly::connected() const {
  if (placements.empty()) return true;
  std::set<Pos> seen;
  std::deque<Pos> queue{placements.begin()->first};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Pos p = queue.front();
    queue.pop_front();
    for (Dir d : kDirs) {
      Pos q = step(p, d);
      if (placements.count(q) && !seen.count(q)) {
        seen.insert(q);
        queue.push_back(q);
      }
    }
  }
  return seen.size() == placements.size();
}

std::pair<Pos, Pos> Assembly::bounds() const {
  Pos lo = placements.begin()->first;
  Pos hi = lo;
  for (const auto& [p, _] : placements) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  return {lo, hi};
}

void TileSystem::validate() const {
  if (temperature < 1) throw ValidationError("temperature must be >= 1");
  if (glues.empty() || !glues[0].name.empty() || glues[0].strength != 0)
    throw ValidationError("glue 0 must be the null glue");
  for (const Glue& g : glues)
    if (g.strength < 0) throw ValidationError("negative glue strength: " + g.name);
  for (size_t i = 0; i < tiles.size(); ++i) {
    if (tiles[i].id != static_cast<TileId>(i))
      throw ValidationError("tile ids must be contiguous from 0");
    for (Dir d : kDirs) {
      GlueId g = tiles[i].edge(d);
      if (g < 0 || g >= static_cast<GlueId>(glues.size()))
        throw ValidationError("tile " + tiles[i].label + " references unknown glue");
    }
  }
  if (seed.empty()) throw ValidationError("seed must be non-empty");
  if (!seed.connected()) throw ValidationError("seed must be connected");
  for (const auto& [p, t] : seed.placements)
    if (t < 0 || t >= static_cast<TileId>(tiles.size()))
      throw ValidationError("seed references unknown tile id");
}

int binding_strength(const TileSystem& sys, const Assembly& asm_, Pos pos,
                     TileId tile) {
  if (asm_.occupied(pos)) throw OccupiedSiteError("position already occupied");
  if (tile < 0 || tile >= static_cast<TileId>(sys.tiles.size()))
    throw UnknownTileError("unknown tile id " + std::to_string(tile));
  const TileType& cand = sys.tile(tile);
  int total = 0;
  for (Dir d : kDirs) {
    auto neighbour = asm_.at(step(pos, d));
    if (!neighbour) continue;
    GlueId mine = cand.edge(d);
    GlueId theirs = sys.tile(*neighbour).edge(opposite(d));
    if (mine == 0 || theirs == 0) continue;  // null glue matches nothing
    const Glue& a = sys.glue(mine);
    const Glue& b = sys.glue(theirs);
    if (a.name == b.name) total += a.strength;
  }
  return total;
}

std::vector<TileId> attachable_at(const TileSystem& sys, const Assembly& asm_,
                                  Pos pos) {
  std::vector<TileId> out;
  for (const TileType& t : sys.tiles)
    if (binding_strength(sys, asm_, pos, t.id) >= sys.temperature)
      out.push_back(t.id);
  return out;
}

std::map<Pos, std::vector<TileId>> frontier(const TileSystem& sys,
                                            const Assembly& asm_) {
  std::map<Pos, std::vector<TileId>> out;
  std::set<Pos> candidates;
  for (const auto& [p, _] : asm_.placements)
    for (Dir d : kDirs) {
      Pos q = step(p, d);
      if (!asm_.occupied(q)) candidates.insert(q);
    }
  for (Pos p : candidates) {
    auto ids = attachable_at(sys, asm_, p);
    if (!ids.empty()) out.emplace(p, std::move(ids));
  }
  return out;
}

namespace {

std::string manifest_token(const std::string& name) {
  return name.empty() ? "-" : name;
}

std::string parse_glue_token(const std::string& tok) {
  return tok == "-" ? "" : tok;
}

}  // namespace

std::string write_manifest(const TileSystem& sys) {
  std::ostringstream out;
  out << "tileset " << (sys.name.empty() ? "unnamed" : sys.name)
      << " temperature=" << sys.temperature << "\n";
  for (size_t i = 1; i < sys.glues.size(); ++i)
    out << "glue " << sys.glues[i].name << " " << sys.glues[i].strength << "\n";
  for (const TileType& t : sys.tiles) {
    out << "tile " << t.id << " " << t.label;
    const char* keys[4] = {"N", "E", "S", "W"};
    for (Dir d : kDirs)
      out << " " << keys[static_cast<int>(d)] << "="
          << manifest_token(sys.glue(t.edge(d)).name);
    out << " color=" << t.color << "\n";
  }
  for (const auto& [p, t] : sys.seed.placements)
    out << "seed " << p.x << " " << p.y << " " << t << "\n";
  return out.str();
}

TileSystem read_manifest(const std::string& text) {
  TileSystem sys;
  sys.glues.push_back({"", 0});
  std::map<std::string, GlueId> by_name{{"", 0}};
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ValidationError("manifest line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "tileset") {
      std::string name, temp;
      if (!(ls >> name >> temp) || temp.rfind("temperature=", 0) != 0)
        fail("expected `tileset <name> temperature=<t>`");
      sys.name = name;
      sys.temperature = std::stoi(temp.substr(12));
    } else if (kw == "glue") {
      std::string name;
      int strength;
      if (!(ls >> name >> strength)) fail("expected `glue <name> <strength>`");
      by_name[name] = static_cast<GlueId>(sys.glues.size());
      sys.glues.push_back({name, strength});
    } else if (kw == "tile") {
      TileType t;
      std::string tok;
      if (!(ls >> t.id >> t.label)) fail("expected `tile <id> <label> ...`");
      while (ls >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) fail("bad tile attribute: " + tok);
        std::string key = tok.substr(0, eq);
        std::string val = tok.substr(eq + 1);
        int dir = key == "N" ? 0 : key == "E" ? 1 : key == "S" ? 2 : key == "W" ? 3 : -1;
        if (dir >= 0) {
          std::string gname = parse_glue_token(val);
          auto it = by_name.find(gname);
          if (it == by_name.end()) fail("unknown glue: " + gname);
          t.edges[dir] = it->second;
        } else if (key == "color") {
          t.color = val;
        } else {
          fail("bad tile attribute: " + key);
        }
      }
      if (t.id != static_cast<TileId>(sys.tiles.size()))
        fail("tile ids must appear contiguously from 0");
      sys.tiles.push_back(t);
    } else if (kw == "seed") {
      Pos p;
      TileId t;
      if (!(ls >> p.x >> p.y >> t)) fail("expected `seed <x> <y> <tileid>`");
      sys.seed.placements[p] = t;
    } else {
      fail("unknown directive: " + kw);
    }
  }
  sys.validate();
  return sys;
}

TileSystem read_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open manifest: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_manifest(buf.str());
}

}  // namespace tilearith
