#pragma once

// Static renders of a terminal assembly: a character grid (one label
// initial per tile) or a PPM image coloured by the tile color field.

#include <string>

#include "tilearith/core.hpp"

namespace tilearith {

std::string render_text(const TileSystem& sys, const Assembly& asm_);
std::string render_ppm(const TileSystem& sys, const Assembly& asm_,
                       int cell_px = 8);

}  // namespace tilearith
