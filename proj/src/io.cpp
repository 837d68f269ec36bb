#include "hexspan/io.hpp"

#include "hexspan/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace hexspan {

namespace {

std::vector<std::string> tokenize(const std::string& line)
{
    const auto hash = line.find('#');
    std::istringstream in(hash == std::string::npos ? line : line.substr(0, hash));
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;)
        tokens.push_back(tok);
    return tokens;
}

int parse_int(const std::string& tok, int line, const char* what)
{
    int value = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + tok + "'");
    return value;
}

void expect_arity(const std::vector<std::string>& tokens, std::size_t n, int line)
{
    if (tokens.size() != n)
        throw ParseError(line, "'" + tokens[0] + "' takes " + std::to_string(n - 1) + " values, got " +
                                   std::to_string(tokens.size() - 1));
}

} // namespace

ColoringFile read_coloring(std::istream& in)
{
    int line_no = 0;
    bool header = false;
    std::optional<int> l;
    std::optional<Sublattice> lattice;
    bool window = false;
    std::vector<std::pair<Vertex, int>> cells;
    std::vector<int> cell_lines;

    for (std::string line; std::getline(in, line);) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty())
            continue;
        if (!header) {
            if (tokens.size() != 2 || tokens[0] != "hexcolor" || tokens[1] != "v1")
                throw ParseError(line_no, "expected header 'hexcolor v1'");
            header = true;
            continue;
        }
        const std::string& key = tokens[0];
        if (key == "l") {
            expect_arity(tokens, 2, line_no);
            if (l)
                throw ParseError(line_no, "duplicate 'l' line");
            l = parse_int(tokens[1], line_no, "l");
            if (*l < 1)
                throw ParseError(line_no, "l must be >= 1");
        } else if (key == "lattice") {
            expect_arity(tokens, 5, line_no);
            if (lattice || window)
                throw ParseError(line_no, "more than one 'lattice'/'window' line");
            const Translation t1{parse_int(tokens[1], line_no, "a1"), parse_int(tokens[2], line_no, "b1")};
            const Translation t2{parse_int(tokens[3], line_no, "a2"), parse_int(tokens[4], line_no, "b2")};
            try {
                lattice = Sublattice::from_basis(t1, t2);
            } catch (const RangeError& e) {
                throw ParseError(line_no, e.what());
            }
        } else if (key == "window") {
            expect_arity(tokens, 1, line_no);
            if (lattice || window)
                throw ParseError(line_no, "more than one 'lattice'/'window' line");
            window = true;
        } else if (key == "cell") {
            expect_arity(tokens, 4, line_no);
            if (!lattice && !window)
                throw ParseError(line_no, "'cell' before 'lattice' or 'window'");
            const Vertex v{parse_int(tokens[1], line_no, "i"), parse_int(tokens[2], line_no, "j")};
            const int color = parse_int(tokens[3], line_no, "color");
            if (color < 1)
                throw ParseError(line_no, "colours must be >= 1");
            cells.emplace_back(v, color);
            cell_lines.push_back(line_no);
        } else {
            throw ParseError(line_no, "unknown keyword '" + key + "'");
        }
    }
    if (!header)
        throw ParseError(line_no, "empty file, expected header 'hexcolor v1'");
    if (!l)
        throw ParseError(line_no, "missing 'l' line");
    if (!lattice && !window)
        throw ParseError(line_no, "missing 'lattice' or 'window' line");

    if (window) {
        WindowColoring out;
        out.l = *l;
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (!out.assignment.emplace(cells[k].first, cells[k].second).second)
                throw ParseError(cell_lines[k], "duplicate cell");
        return out;
    }

    LatticeColoring out{*l, *lattice, std::vector<int>(static_cast<std::size_t>(lattice->index()), 0)};
    for (std::size_t k = 0; k < cells.size(); ++k) {
        auto& slot = out.colors[static_cast<std::size_t>(lattice->rep_index(lattice->reduce(cells[k].first)))];
        if (slot != 0)
            throw ParseError(cell_lines[k], "cell repeats a coset already coloured");
        slot = cells[k].second;
    }
    for (std::size_t k = 0; k < out.colors.size(); ++k)
        if (out.colors[k] == 0) {
            const Vertex rep = lattice->representatives()[k];
            throw ParseError(line_no, "coset of (" + std::to_string(rep.i) + "," + std::to_string(rep.j) + ") has no cell");
        }
    return out;
}

ColoringFile read_coloring_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open '" + path + "'");
    return read_coloring(in);
}

void write_coloring(std::ostream& out, const ColoringFile& coloring)
{
    out << "hexcolor v1\n";
    if (const auto* lat = std::get_if<LatticeColoring>(&coloring)) {
        out << "l " << lat->l << '\n';
        out << "# " << to_string(lat->mode()) << ", " << lat->color_count() << " colours, index " << lat->lattice.index() << '\n';
        const Translation t1 = lat->lattice.t1();
        const Translation t2 = lat->lattice.t2();
        out << "lattice " << t1.di << ' ' << t1.dj << ' ' << t2.di << ' ' << t2.dj << '\n';
        const auto reps = lat->lattice.representatives();
        for (std::size_t k = 0; k < reps.size(); ++k)
            out << "cell " << reps[k].i << ' ' << reps[k].j << ' ' << lat->colors[k] << '\n';
    } else {
        const auto& win = std::get<WindowColoring>(coloring);
        out << "l " << win.l << '\n';
        out << "window\n";
        for (const auto& [v, c] : win.assignment)
            out << "cell " << v.i << ' ' << v.j << ' ' << c << '\n';
    }
}

DimacsSummary write_dimacs(std::ostream& out, int l, int radius, int guard)
{
    if (l < 1)
        throw RangeError("l", "must be >= 1, got " + std::to_string(l));
    if (radius < 0)
        throw RangeError("radius", "must be >= 0, got " + std::to_string(radius));
    const auto window = ball({0, 0}, radius);
    if (window.size() > static_cast<std::size_t>(guard))
        throw GuardError("window of radius " + std::to_string(radius) + " has " + std::to_string(window.size()) +
                         " vertices, above the guard of " + std::to_string(guard));
    const auto adj = power_graph(window, l);
    DimacsSummary summary{window.size(), 0};
    for (const auto& row : adj)
        summary.edges += row.size();
    summary.edges /= 2;

    out << "c distance-" << l << " power graph of the hexagonal grid, radius-" << radius << " window around (0,0)\n";
    for (std::size_t k = 0; k < window.size(); ++k)
        out << "c v " << k + 1 << ' ' << window[k].i << ' ' << window[k].j << '\n';
    out << "p edge " << summary.vertices << ' ' << summary.edges << '\n';
    for (std::size_t a = 0; a < adj.size(); ++a)
        for (int b : adj[a])
            if (static_cast<std::size_t>(b) > a)
                out << "e " << a + 1 << ' ' << b + 1 << '\n';
    return summary;
}

} // namespace hexspan
