#include "oracles.hpp"

#include "hexspan/errors.hpp"
#include "hexspan/io.hpp"
#include "hexspan/svg.hpp"

#include <doctest.h>

#include <regex>
#include <sstream>

using namespace hexspan;

namespace {

std::string serialise(const ColoringFile& file)
{
    std::ostringstream out;
    write_coloring(out, file);
    return out.str();
}

ColoringFile parse(const std::string& text)
{
    std::istringstream in(text);
    return read_coloring(in);
}

int parse_error_line(const std::string& text)
{
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

std::size_t count(const std::string& haystack, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1))
        ++n;
    return n;
}

LatticeColoring small_lattice()
{
    LatticeColoring c;
    c.l = 2;
    c.lattice = Sublattice::from_hnf(2, 0, 2);
    c.colors = {1, 2, 3, 4};
    return c;
}

} // namespace

TEST_CASE("lattice files round-trip")
{
    const auto found = search_lattice(5, 64);
    REQUIRE(found.has_value());
    const ColoringFile file = *found;
    const std::string text = serialise(file);
    CHECK(text.rfind("hexcolor v1\n", 0) == 0);
    const ColoringFile back = parse(text);
    CHECK(back == file);
    CHECK(serialise(back) == text);
}

TEST_CASE("window files round-trip")
{
    WindowColoring w;
    w.l = 3;
    int c = 1;
    for (Vertex v : ball({-2, 3}, 3))
        w.assignment[v] = c++ % 7 + 1;
    const ColoringFile file = w;
    CHECK(parse(serialise(file)) == file);
}

TEST_CASE("lattice files accept any coset representative")
{
    const std::string text = "hexcolor v1\n# comment\nl 2\nlattice 0 2 2 0\ncell 2 2 1\ncell 1 0 3   # trailing\ncell 0 -1 2\ncell 3 3 4\n";
    const auto file = parse(text);
    REQUIRE(std::holds_alternative<LatticeColoring>(file));
    const auto& lat = std::get<LatticeColoring>(file);
    CHECK(lat.lattice == Sublattice::from_hnf(2, 0, 2));
    CHECK(lat.color_at({0, 0}) == 1);
    CHECK(lat.color_at({1, 0}) == 3);
    CHECK(lat.color_at({0, 1}) == 2);
    CHECK(lat.color_at({1, 1}) == 4);
}

TEST_CASE("parse errors carry line numbers")
{
    CHECK(parse_error_line("") == 0);
    CHECK(parse_error_line("hexcolour v1\n") == 1);
    CHECK(parse_error_line("hexcolor v1\nl four\n") == 2);
    CHECK(parse_error_line("hexcolor v1\nl 2\nwindow\ncell 0 0\n") == 4);
    CHECK(parse_error_line("hexcolor v1\nl 2\nwindow\ncell 0 0 1\ncell 0 0 2\n") == 5);
    CHECK(parse_error_line("hexcolor v1\nl 2\nwindow\n\nshape 1\n") == 5);
    CHECK(parse_error_line("hexcolor v1\nl 2\ncell 0 0 1\n") == 3);
    CHECK(parse_error_line("hexcolor v1\nl 2\nlattice 1 1 2 2\n") == 3);
    CHECK(parse_error_line("hexcolor v1\nl 2\nwindow\ncell 0 0 0\n") == 4);
    CHECK(parse_error_line("hexcolor v1\nl 2\nlattice 2 0 0 2\ncell 0 0 1\n") > 0);
    CHECK_THROWS_AS(read_coloring_file("/nonexistent/file.col"), std::exception);
}

TEST_CASE("dimacs export counts")
{
    const std::vector<std::tuple<int, int, std::size_t, std::size_t>> frozen = {
        {2, 1, 4, 6}, {4, 2, 10, 45}, {4, 3, 19, 132}, {4, 4, 31, 264}, {6, 3, 19, 171},
    };
    for (const auto& [l, r, n, m] : frozen) {
        CHECK(oracle::ball({0, 0}, r).size() == n);
        CHECK(static_cast<std::size_t>(oracle::power_edges({0, 0}, r, l)) == m);
        std::ostringstream out;
        const DimacsSummary s = write_dimacs(out, l, r);
        CHECK(s.vertices == n);
        CHECK(s.edges == m);
        const std::string text = out.str();
        CHECK(text.find("p edge " + std::to_string(n) + " " + std::to_string(m) + "\n") != std::string::npos);
        CHECK(count(text, "\ne ") == m);
        CHECK(count(text, "\nc v ") == n);
    }
}

TEST_CASE("dimacs edges are ordered, unique and exactly the close pairs")
{
    std::ostringstream out;
    write_dimacs(out, 4, 3);
    std::istringstream in(out.str());
    std::map<int, Vertex> id;
    std::set<std::pair<int, int>> edges;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string tag;
        row >> tag;
        if (tag == "c") {
            std::string kind;
            int n = 0;
            Vertex v;
            if (row >> kind >> n >> v.i >> v.j && kind == "v")
                id[n] = v;
        } else if (tag == "e") {
            int u = 0;
            int v = 0;
            row >> u >> v;
            CHECK(u < v);
            CHECK(edges.insert({u, v}).second);
        }
    }
    REQUIRE(id.size() == 19);
    CHECK(id.begin()->first == 1);
    for (const auto& [a, va] : id)
        for (const auto& [b, vb] : id)
            if (a < b)
                CHECK((oracle::distance(va, vb) <= 4) == (edges.count({a, b}) == 1));
    std::ostringstream big;
    CHECK_THROWS_AS(write_dimacs(big, 4, 20), GuardError);
    CHECK(write_dimacs(big, 4, 20, 1000).vertices == 631);
}

TEST_CASE("svg has one polygon per window cell and is deterministic")
{
    const auto result = exact_window_span(4, 3, 19);
    REQUIRE(result.coloring.has_value());
    const ColoringFile file = *result.coloring;
    const std::string svg = render_svg(file);
    CHECK(count(svg, "<polygon ") == 19);
    CHECK(count(svg, "<text ") == 19);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
    CHECK(render_svg(file) == svg);
}

TEST_CASE("svg of a lattice colouring tiles the domain three by three")
{
    const ColoringFile small = small_lattice();
    CHECK(count(render_svg(small), "<polygon ") == 9 * 4);
    const auto found = search_lattice(10, 64);
    REQUIRE(found.has_value());
    const ColoringFile file = *found;
    const std::string svg = render_svg(file);
    CHECK(count(svg, "<polygon ") == 9 * static_cast<std::size_t>(found->lattice.index()));
    CHECK(count(svg, "stroke-width=\"1.5\"") == static_cast<std::size_t>(found->lattice.index()));
    // The tiles cover distinct cells.
    const std::regex title("<title>\\((-?\\d+),(-?\\d+)\\) colour");
    std::set<std::pair<int, int>> cells;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), title); it != std::sregex_iterator(); ++it)
        cells.insert({std::stoi((*it)[1]), std::stoi((*it)[2])});
    CHECK(cells.size() == 9 * static_cast<std::size_t>(found->lattice.index()));
}

TEST_CASE("palette is stable and well formed")
{
    const std::regex hex("#[0-9a-f]{6}");
    std::set<std::string> seen;
    for (int c = 1; c <= 80; ++c) {
        const std::string colour = palette(c);
        CHECK(std::regex_match(colour, hex));
        seen.insert(colour);
    }
    CHECK(seen.size() >= 75);
    CHECK(palette(3) == palette(3));
}
