#include "tilearith/xgrow.hpp"

#include <map>
#include <sstream>

namespace tilearith {

XgrowDocument to_xgrow(const TileSystem& sys) {
  XgrowDocument doc;
  std::map<GlueId, int> index;
  std::vector<GlueId> order;
  auto visit = [&](GlueId g) {
    if (g == 0) return;
    if (index.emplace(g, static_cast<int>(order.size()) + 1).second)
      order.push_back(g);
  };
  for (const auto& [_, t] : sys.seed.placements)
    for (Dir d : kDirs) visit(sys.tile(t).edge(d));
  for (const TileType& t : sys.tiles)
    for (Dir d : kDirs) visit(t.edge(d));

  doc.num_tile_types = static_cast<int>(sys.tiles.size());
  doc.num_binding_types = static_cast<int>(order.size());
  for (const TileType& t : sys.tiles) {
    XgrowTileRow row;
    for (int d = 0; d < 4; ++d) {
      GlueId g = t.edges[d];
      row.edges[d] = g == 0 ? 0 : index.at(g);
    }
    row.color = t.color;
    doc.tile_rows.push_back(row);
  }
  for (GlueId g : order) doc.binding_strengths.push_back(sys.glue(g).strength);
  for (const auto& [p, t] : sys.seed.placements) doc.seed.emplace_back(p, t);
  return doc;
}

std::string serialize_tiles(const XgrowDocument& doc) {
  std::ostringstream out;
  out << "tile edges matches {{N E S W}*}\n";
  out << "num tile types=" << doc.num_tile_types << "\n";
  out << "num binding types=" << doc.num_binding_types << "\n";
  out << "tile edges={\n";
  for (const XgrowTileRow& row : doc.tile_rows) {
    out << "{" << row.edges[0] << " " << row.edges[1] << " " << row.edges[2]
        << " " << row.edges[3] << "}";
    if (!row.color.empty()) out << "[" << row.color << "]";
    out << "\n";
  }
  out << "}\n";
  out << "binding strengths={";
  for (int s : doc.binding_strengths) out << " " << s;
  out << " }\n";
  for (const auto& [p, t] : doc.seed)
    out << "% seed " << p.x << " " << p.y << " " << t << "\n";
  return out.str();
}

std::string emit_tiles(const TileSystem& sys) {
  return serialize_tiles(to_xgrow(sys));
}

XgrowDocument parse_tiles_document(const std::string& text) {
  XgrowDocument doc;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_tiles = false, saw_bindings = false, in_tiles = false;
  auto fail = [&](const std::string& msg) { throw XgrowParseError(msg, lineno); };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.rfind("% seed ", 0) == 0) {
      std::istringstream ls(line.substr(7));
      Pos p;
      TileId t;
      if (!(ls >> p.x >> p.y >> t)) fail("malformed seed comment");
      doc.seed.emplace_back(p, t);
      continue;
    }
    if (line.empty() || line[0] == '%') continue;
    if (in_tiles) {
      if (line == "}") {
        in_tiles = false;
        continue;
      }
      if (line.empty() || line[0] != '{') fail("expected `{n e s w}` tile row");
      auto close = line.find('}');
      if (close == std::string::npos) fail("unterminated tile row");
      XgrowTileRow row;
      std::istringstream ls(line.substr(1, close - 1));
      if (!(ls >> row.edges[0] >> row.edges[1] >> row.edges[2] >> row.edges[3]))
        fail("tile row needs four glue indices");
      auto open = line.find('[', close);
      if (open != std::string::npos) {
        auto end = line.find(']', open);
        if (end == std::string::npos) fail("unterminated color tag");
        row.color = line.substr(open + 1, end - open - 1);
      }
      doc.tile_rows.push_back(row);
      continue;
    }
    if (line.rfind("tile edges matches", 0) == 0) continue;
    if (line.rfind("num tile types=", 0) == 0) {
      doc.num_tile_types = std::stoi(line.substr(15));
      continue;
    }
    if (line.rfind("num binding types=", 0) == 0) {
      doc.num_binding_types = std::stoi(line.substr(18));
      continue;
    }
    if (line.rfind("tile edges={", 0) == 0) {
      saw_tiles = true;
      in_tiles = true;
      continue;
    }
    if (line.rfind("binding strengths={", 0) == 0) {
      saw_bindings = true;
      auto close = line.find('}');
      if (close == std::string::npos) fail("unterminated binding strengths");
      std::istringstream ls(line.substr(19, close - 19));
      int s;
      while (ls >> s) doc.binding_strengths.push_back(s);
      continue;
    }
    fail("unknown directive: " + line);
  }
  if (in_tiles) fail("unterminated `tile edges` stanza");
  if (!saw_tiles) throw XgrowParseError("missing `tile edges` stanza", lineno);
  if (!saw_bindings)
    throw XgrowParseError("missing `binding strengths` stanza", lineno);
  if (static_cast<int>(doc.tile_rows.size()) != doc.num_tile_types)
    throw XgrowParseError("tile row count disagrees with num tile types", lineno);
  if (static_cast<int>(doc.binding_strengths.size()) != doc.num_binding_types)
    throw XgrowParseError("binding strength count disagrees with num binding types",
                          lineno);
  return doc;
}

TileSystem parse_tiles(const std::string& text) {
  XgrowDocument doc = parse_tiles_document(text);
  TileSystem sys;
  sys.name = "parsed";
  sys.glues.push_back({"", 0});
  for (int i = 0; i < doc.num_binding_types; ++i)
    sys.glues.push_back({"g" + std::to_string(i + 1), doc.binding_strengths[i]});
  for (size_t i = 0; i < doc.tile_rows.size(); ++i) {
    TileType t;
    t.id = static_cast<TileId>(i);
    t.label = "t" + std::to_string(i);
    for (int d = 0; d < 4; ++d) {
      int g = doc.tile_rows[i].edges[d];
      if (g < 0 || g > doc.num_binding_types)
        throw XgrowParseError("tile references glue index out of range", 0);
      t.edges[d] = g;
    }
    if (!doc.tile_rows[i].color.empty()) t.color = doc.tile_rows[i].color;
    sys.tiles.push_back(t);
  }
  for (const auto& [p, t] : doc.seed) sys.seed.placements[p] = t;
  return sys;
}

std::string tiles_filename(const ExpressionSpec& spec) {
  std::ostringstream out;
  auto join = [&](const std::vector<std::uint64_t>& xs) {
    for (size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  };
  switch (spec.kind) {
    case ExprKind::Add:
      out << (spec.add.variant == AddVariant::EightTile  ? "add_8_tile_"
              : spec.add.variant == AddVariant::SixTile ? "add_6_tile_"
                                                        : "add_L_tile_");
      join(spec.add.inputs);
      break;
    case ExprKind::Mul:
      out << "mul_tile_";
      join(spec.mul.inputs);
      break;
    case ExprKind::Signed:
    case ExprKind::SignedMod: {
      if (spec.kind == ExprKind::SignedMod)
        out << "mod_" << *spec.sig.modulus << "_tile_";
      else
        out << "addsub_tile_";
      for (size_t i = 0; i < spec.sig.terms.size(); ++i) {
        if (i) out << ",";
        if (spec.sig.terms[i].sign < 0) out << "-";
        out << spec.sig.terms[i].magnitude;
      }
      break;
    }
    case ExprKind::Prime:
      out << "prime_tile_" << spec.prime.n;
      break;
  }
  out << ".tiles";
  return out.str();
}

}  // namespace tilearith
