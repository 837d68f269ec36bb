#include "hexspan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

namespace hexspan {

namespace {

constexpr double kEdge = 24.0;
const double kWidth = kEdge * std::sqrt(3.0) / 2.0;
constexpr double kMargin = 12.0;

struct Point {
    double x;
    double y;
};

std::array<Point, 3> triangle(Vertex v)
{
    const double x0 = v.i * kWidth;
    const double yc = -v.j * kEdge / 2.0;  // SVG y grows downwards
    if (is_right(v))
        return {{{x0, yc}, {x0 + kWidth, yc - kEdge / 2.0}, {x0 + kWidth, yc + kEdge / 2.0}}};
    return {{{x0, yc - kEdge / 2.0}, {x0, yc + kEdge / 2.0}, {x0 + kWidth, yc}}};
}

std::string fmt(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", value == 0.0 ? 0.0 : value);
    return buf;
}

struct Cell {
    Vertex v;
    int color;
    bool highlight;
};

// Lagrange-Gauss reduction of a 2D integer basis.
std::pair<Translation, Translation> reduce_basis(Translation u, Translation w)
{
    auto norm = [](Translation t) { return static_cast<long long>(t.di) * t.di + static_cast<long long>(t.dj) * t.dj; };
    auto dot = [](Translation a, Translation b) { return static_cast<long long>(a.di) * b.di + static_cast<long long>(a.dj) * b.dj; };
    if (norm(u) > norm(w))
        std::swap(u, w);
    while (true) {
        const double mu = static_cast<double>(dot(u, w)) / static_cast<double>(norm(u));
        const int m = static_cast<int>(std::lround(mu));
        if (m == 0)
            break;
        w = {w.di - m * u.di, w.dj - m * u.dj};
        if (norm(w) >= norm(u))
            break;
        std::swap(u, w);
    }
    return {u, w};
}

std::vector<Cell> lattice_cells(const LatticeColoring& lat)
{
    const Sublattice& lattice = lat.lattice;
    const auto reps = lattice.representatives();
    // Compact domain: the translate of each representative closest to the origin.
    std::vector<Vertex> domain;
    const int bound = 2 * (lattice.a() + lattice.c());
    for (Vertex rep : reps) {
        Vertex best = rep;
        int best_d = distance_closed({0, 0}, rep);
        for (Translation t : lattice.vectors_near(rep - Vertex{0, 0}, bound)) {
            const Vertex cand = rep + t;
            const int d = distance_closed({0, 0}, cand);
            if (d < best_d || (d == best_d && cand < best)) {
                best = cand;
                best_d = d;
            }
        }
        domain.push_back(best);
    }
    const auto [u, w] = reduce_basis(lattice.t1(), lattice.t2());
    std::vector<Cell> cells;
    for (int x = -1; x <= 1; ++x)
        for (int y = -1; y <= 1; ++y)
            for (std::size_t k = 0; k < domain.size(); ++k) {
                const Translation shift{x * u.di + y * w.di, x * u.dj + y * w.dj};
                cells.push_back({domain[k] + shift, lat.colors[k], x == 0 && y == 0});
            }
    return cells;
}

} // namespace

std::string palette(int color)
{
    const double hue = std::fmod(color * 137.50776405, 360.0);
    const double s = 0.55;
    const double l = color % 2 ? 0.62 : 0.72;
    const double c = (1.0 - std::fabs(2.0 * l - 1.0)) * s;
    const double hp = hue / 60.0;
    const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    if (hp < 1) { r = c; g = x; }
    else if (hp < 2) { r = x; g = c; }
    else if (hp < 3) { g = c; b = x; }
    else if (hp < 4) { g = x; b = c; }
    else if (hp < 5) { r = x; b = c; }
    else { r = c; b = x; }
    const double m = l - c / 2.0;
    auto channel = [&](double value) { return static_cast<int>(std::lround((value + m) * 255.0)); };
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", channel(r), channel(g), channel(b));
    return buf;
}

std::string render_svg(const ColoringFile& coloring)
{
    std::vector<Cell> cells;
    int l = 0;
    if (const auto* lat = std::get_if<LatticeColoring>(&coloring)) {
        cells = lattice_cells(*lat);
        l = lat->l;
    } else {
        const auto& win = std::get<WindowColoring>(coloring);
        l = win.l;
        for (const auto& [v, c] : win.assignment)
            cells.push_back({v, c, false});
    }

    double min_x = std::numeric_limits<double>::max(), min_y = min_x;
    double max_x = std::numeric_limits<double>::lowest(), max_y = max_x;
    for (const auto& cell : cells)
        for (Point pt : triangle(cell.v)) {
            min_x = std::min(min_x, pt.x);
            max_x = std::max(max_x, pt.x);
            min_y = std::min(min_y, pt.y);
            max_y = std::max(max_y, pt.y);
        }
    if (cells.empty())
        min_x = min_y = max_x = max_y = 0;
    const double ox = kMargin - min_x;
    const double oy = kMargin - min_y;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(max_x - min_x + 2 * kMargin)
        << "\" height=\"" << fmt(max_y - min_y + 2 * kMargin) << "\">\n";
    svg << "<title>distance-" << l << " colouring, " << cells.size() << " cells</title>\n";
    svg << "<g stroke=\"#333333\" stroke-width=\"0.5\" font-family=\"sans-serif\" font-size=\"7\" text-anchor=\"middle\">\n";
    for (const auto& cell : cells) {
        const auto tri = triangle(cell.v);
        svg << "<polygon points=\"";
        for (std::size_t k = 0; k < tri.size(); ++k)
            svg << (k ? " " : "") << fmt(tri[k].x + ox) << ',' << fmt(tri[k].y + oy);
        svg << "\" fill=\"" << palette(cell.color) << '"';
        if (cell.highlight)
            svg << " stroke-width=\"1.5\"";
        svg << "><title>(" << cell.v.i << "," << cell.v.j << ") colour " << cell.color << "</title></polygon>\n";
        const double cx = (tri[0].x + tri[1].x + tri[2].x) / 3.0 + ox;
        const double cy = (tri[0].y + tri[1].y + tri[2].y) / 3.0 + oy + 2.5;
        svg << "<text x=\"" << fmt(cx) << "\" y=\"" << fmt(cy) << "\" stroke=\"none\">" << cell.color << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

} // namespace hexspan
