#pragma once

// Text formats: the "hexcolor v1" colouring file and DIMACS edge files.
//
//   hexcolor v1
//   l <int>
//   lattice <a1> <b1> <a2> <b2>     or     window
//   cell <i> <j> <color>            (one per line)
//
// Tokens are whitespace separated; '#' starts a comment. A lattice file
// lists one cell per coset of the lattice (any representative will do).

#include "hexspan/coloring.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace hexspan {

using ColoringFile = std::variant<LatticeColoring, WindowColoring>;

// Throws ParseError carrying the offending line number.
ColoringFile read_coloring(std::istream& in);
ColoringFile read_coloring_file(const std::string& path);

void write_coloring(std::ostream& out, const ColoringFile& coloring);

struct DimacsSummary {
    std::size_t vertices = 0;
    std::size_t edges = 0;
};

// l-th power graph of the radius ball around the origin. Vertex ids are
// 1-based in lexicographic (i, j) order; a comment block maps ids to
// coordinates. Throws GuardError above `guard` vertices.
DimacsSummary write_dimacs(std::ostream& out, int l, int radius, int guard = 200);

} // namespace hexspan
