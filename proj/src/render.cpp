#include "tilearith/render.hpp"

#include <array>
#include <map>
#include <sstream>

namespace tilearith {

std::string render_text(const TileSystem& sys, const Assembly& asm_) {
  if (asm_.empty()) return "";
  auto [lo, hi] = asm_.bounds();
  std::ostringstream out;
  for (int y = hi.y; y >= lo.y; --y) {
    for (int x = lo.x; x <= hi.x; ++x) {
      auto t = asm_.at({x, y});
      out << (t ? (sys.tile(*t).label.empty() ? '?' : sys.tile(*t).label[0])
               : '.');
    }
    out << "\n";
  }
  return out.str();
}

namespace {

std::array<unsigned char, 3> color_rgb(const std::string& name) {
  static const std::map<std::string, std::array<unsigned char, 3>> table = {
      {"red", {220, 50, 47}},     {"white", {255, 255, 255}},
      {"gray", {160, 160, 160}},  {"green", {133, 153, 0}},
      {"blue", {38, 139, 210}},   {"slate", {88, 110, 117}},
      {"cyan", {42, 161, 152}},   {"yellow", {181, 137, 0}},
      {"lime", {120, 220, 100}},  {"orange", {203, 75, 22}},
  };
  auto it = table.find(name);
  return it == table.end() ? std::array<unsigned char, 3>{128, 128, 128}
                           : it->second;
}

}  // namespace

std::string render_ppm(const TileSystem& sys, const Assembly& asm_,
                       int cell_px) {
  if (asm_.empty()) return "P6\n1 1\n255\n" + std::string(3, '\0');
  auto [lo, hi] = asm_.bounds();
  int cols = hi.x - lo.x + 1;
  int rows = hi.y - lo.y + 1;
  int width = cols * cell_px;
  int height = rows * cell_px;
  std::string pixels(static_cast<size_t>(width) * height * 3, '\0');
  for (int y = 0; y < height; ++y) {
    int ty = hi.y - y / cell_px;  // image rows run north to south
    for (int x = 0; x < width; ++x) {
      int tx = lo.x + x / cell_px;
      auto t = asm_.at({tx, ty});
      std::array<unsigned char, 3> rgb{20, 20, 20};
      if (t) {
        rgb = color_rgb(sys.tile(*t).color);
        // thin border so individual tiles stay visible
        if (x % cell_px == 0 || y % cell_px == 0)
          rgb = {static_cast<unsigned char>(rgb[0] / 2),
                 static_cast<unsigned char>(rgb[1] / 2),
                 static_cast<unsigned char>(rgb[2] / 2)};
      }
      size_t i = (static_cast<size_t>(y) * width + x) * 3;
      pixels[i] = static_cast<char>(rgb[0]);
      pixels[i + 1] = static_cast<char>(rgb[1]);
      pixels[i + 2] = static_cast<char>(rgb[2]);
    }
  }
  std::ostringstream out;
  out << "P6\n" << width << " " << height << "\n255\n" << pixels;
  return out.str();
}

}  // namespace tilearith
