#pragma once

// xgrow-compatible `.tiles` emission and parsing.
//
// Emitted stanza layout, ASCII, newline terminated, `%` comments:
//
//   tile edges matches {{N E S W}*}
//   num tile types=<T>
//   num binding types=<B>
//   tile edges={
//   {n e s w}[color]
//   ...
//   }
//   binding strengths={ s1 ... sB }
//   % seed x y tileid
//
// Glue index 0 is the null glue; binding strengths are indexed from 1.
// Seed coordinates are not part of the grammar xgrow reads, so they ride in
// trailing comment lines.

#include <string>
#include <vector>

#include "tilearith/core.hpp"
#include "tilearith/specs.hpp"

namespace tilearith {

struct XgrowParseError : std::runtime_error {
  XgrowParseError(std::string msg, int line_number)
      : std::runtime_error("line " + std::to_string(line_number) + ": " +
                           std::move(msg)),
        line(line_number) {}
  int line = 0;
};

struct XgrowTileRow {
  int edges[4] = {0, 0, 0, 0};  // N E S W glue indices
  std::string color;            // empty = no color tag
};

struct XgrowDocument {
  int num_tile_types = 0;
  int num_binding_types = 0;
  std::vector<XgrowTileRow> tile_rows;
  std::vector<int> binding_strengths;  // index 1..B stored from 0
  std::vector<std::pair<Pos, TileId>> seed;
};

// Dense glue indices are assigned by first use over a fixed traversal: seed
// placements in row order, then tiles by id, edges N,E,S,W. Identical
// systems therefore serialize byte-identically.
XgrowDocument to_xgrow(const TileSystem& sys);
std::string serialize_tiles(const XgrowDocument& doc);
std::string emit_tiles(const TileSystem& sys);

XgrowDocument parse_tiles_document(const std::string& text);
// Glue names are synthesized from indices; temperature defaults to 2.
TileSystem parse_tiles(const std::string& text);

// File naming convention `<op>_<variant>_<inputs joined by ','>.tiles`.
std::string tiles_filename(const ExpressionSpec& spec);

}  // namespace tilearith
