#pragma once

// Internal helper for assembling TileSystems. Glue names are interned under
// a per-construction prefix so independent constructions can never share a
// glue by accident.

#include <map>
#include <string>

#include "tilearith/core.hpp"

namespace tilearith {

class Builder {
 public:
  Builder(std::string system_name, std::string glue_prefix) {
    sys_.name = std::move(system_name);
    prefix_ = std::move(glue_prefix);
    sys_.glues.push_back({"", 0});  // null glue
  }

  GlueId glue(const std::string& name, int strength) {
    std::string full = prefix_ + name;
    auto it = ids_.find(full);
    if (it != ids_.end()) {
      if (sys_.glues[it->second].strength != strength)
        throw std::logic_error("glue " + full + " redefined with new strength");
      return it->second;
    }
    GlueId id = static_cast<GlueId>(sys_.glues.size());
    sys_.glues.push_back({full, strength});
    ids_[full] = id;
    return id;
  }

  TileId tile(const std::string& label, const std::string& family,
              const std::string& color, GlueId north, GlueId east, GlueId south,
              GlueId west) {
    TileType t;
    t.id = static_cast<TileId>(sys_.tiles.size());
    t.label = label;
    t.family = family;
    t.color = color;
    t.edges[0] = north;
    t.edges[1] = east;
    t.edges[2] = south;
    t.edges[3] = west;
    sys_.tiles.push_back(t);
    return t.id;
  }

  void place(int x, int y, TileId t) { sys_.seed.placements[{x, y}] = t; }

  TileSystem take() { return std::move(sys_); }

 private:
  TileSystem sys_;
  std::string prefix_;
  std::map<std::string, GlueId> ids_;
};

inline int bit_of(std::uint64_t v, int i) {
  return i >= 64 ? 0 : static_cast<int>((v >> i) & 1);
}

}  // namespace tilearith
