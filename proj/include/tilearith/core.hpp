#pragma once

// Core abstract Tile Assembly Model: glues, tile types, tile systems and
// assemblies. Square tiles with four glued edges attach to a seeded assembly
// when the summed strength of matching glues meets the system temperature.
// Tiles never rotate. +y is north, +x is east.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tilearith {

using TileId = int;
using GlueId = int;

struct Pos {
  int x = 0;
  int y = 0;
  bool operator==(const Pos&) const = default;
  // Row-major order, lowest row first. Used for reproducible traversal.
  bool operator<(const Pos& o) const { return y != o.y ? y < o.y : x < o.x; }
};

enum class Dir { North = 0, East = 1, South = 2, West = 3 };
constexpr Dir kDirs[4] = {Dir::North, Dir::East, Dir::South, Dir::West};
Dir opposite(Dir d);
Pos step(Pos p, Dir d);

struct Glue {
  std::string name;  // empty = the null glue; matches nothing
  int strength = 0;
};

struct TileType {
  TileId id = -1;
  std::string label;
  // Edge glues indexed by Dir. Value 0 is always the null glue.
  GlueId edges[4] = {0, 0, 0, 0};
  std::string color = "gray";
  std::string family;  // construction family tag (frame, input, ...)

  GlueId edge(Dir d) const { return edges[static_cast<int>(d)]; }
};

struct Assembly {
  std::map<Pos, TileId> placements;

  bool empty() const { return placements.empty(); }
  bool occupied(Pos p) const { return placements.count(p) != 0; }
  std::optional<TileId> at(Pos p) const;
  // Connectivity under 4-neighbour adjacency.
  bool connected() const;
  // Bounding box [min, max], both inclusive. Assembly must be non-empty.
  std::pair<Pos, Pos> bounds() const;
};

struct TileSystem {
  std::string name;
  // glues[0] is always the null glue (empty name, strength 0).
  std::vector<Glue> glues;
  std::vector<TileType> tiles;
  Assembly seed;
  int temperature = 2;

  const Glue& glue(GlueId g) const { return glues.at(g); }
  const TileType& tile(TileId t) const { return tiles.at(t); }
  // Throws ValidationError when a model invariant is broken.
  void validate() const;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OccupiedSiteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownTileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sum over the four directions of the glue strength where the candidate
// tile's edge glue equals the facing edge glue of an adjacent placed tile.
// Empty neighbours and mismatches contribute nothing.
int binding_strength(const TileSystem& sys, const Assembly& asm_, Pos pos,
                     TileId tile);

// Empty positions adjacent to the assembly paired with every tile id whose
// binding strength there meets the temperature. Empty iff the assembly is
// terminal.
std::map<Pos, std::vector<TileId>> frontier(const TileSystem& sys,
                                            const Assembly& asm_);

// Candidate tile ids at one position (position must be empty).
std::vector<TileId> attachable_at(const TileSystem& sys, const Assembly& asm_,
                                  Pos pos);

// Line-oriented manifest: `tileset <name> temperature=<t>`, one `glue`,
// `tile` and `seed` line per entity, `#` comments. The null glue prints
// as `-`.
std::string write_manifest(const TileSystem& sys);
TileSystem read_manifest(const std::string& text);
TileSystem read_manifest_file(const std::string& path);

}  // namespace tilearith
