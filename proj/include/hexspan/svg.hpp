#pragma once

#include "hexspan/io.hpp"

#include <string>

namespace hexspan {

// Draws every vertex as one triangle of the dual triangular tiling, so
// adjacent grid vertices share a triangle edge. Right vertices point left,
// left vertices point right. Cells are filled and labelled by colour.
// Window files draw their cells; lattice files draw a compact fundamental
// domain tiled 3x3 with the domain at the middle outlined. Output bytes
// depend only on the input.
std::string render_svg(const ColoringFile& coloring);

// Deterministic fill colour for a 1-based colour index, "#rrggbb".
std::string palette(int color);

} // namespace hexspan
