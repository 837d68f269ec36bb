#include "hexspan/grid.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace hexspan {

DistanceField::DistanceField(Vertex source, int radius)
    : source_(source), radius_(radius), side_(2 * radius + 1)
{
    if (radius < 0)
        throw std::invalid_argument("radius: must be non-negative");
    // Within distance R the vertical offset is at most R and the horizontal
    // offset at most (R + 1) / 2, so a (2R+1)^2 box is enough.
    dist_.assign(static_cast<std::size_t>(side_) * static_cast<std::size_t>(side_), -1);
    dist_[static_cast<std::size_t>(slot(source))] = 0;
    order_.push_back(source);
    for (std::size_t head = 0; head < order_.size(); ++head) {
        const Vertex u = order_[head];
        const int du = dist_[static_cast<std::size_t>(slot(u))];
        if (du == radius_)
            continue;
        for (Vertex w : hexspan::neighbors(u)) {
            auto& dw = dist_[static_cast<std::size_t>(slot(w))];
            if (dw < 0) {
                dw = du + 1;
                order_.push_back(w);
            }
        }
    }
}

std::ptrdiff_t DistanceField::slot(Vertex v) const
{
    const int x = v.i - source_.i + radius_;
    const int y = v.j - source_.j + radius_;
    if (x < 0 || y < 0 || x >= side_ || y >= side_)
        return -1;
    return static_cast<std::ptrdiff_t>(x) * side_ + y;
}

int DistanceField::at(Vertex v) const
{
    const auto s = slot(v);
    return s < 0 ? -1 : dist_[static_cast<std::size_t>(s)];
}

int distance_bfs(Vertex u, Vertex v)
{
    const int manhattan = std::abs(v.i - u.i) + std::abs(v.j - u.j);
    // Every pair is joined by a path of length at most 2 * manhattan + 1.
    const int cap = 2 * manhattan + 1;
    for (int radius = manhattan;; radius += 4) {
        const DistanceField field(u, std::min(radius, cap));
        if (const int d = field.at(v); d >= 0)
            return d;
        assert(radius < cap && "target unreachable within the proven bound");
        if (radius >= cap)
            throw std::logic_error("distance_bfs: target not reached within bound");
    }
}

std::vector<Vertex> ball(Vertex center, int radius)
{
    DistanceField field(center, radius);
    std::vector<Vertex> out = field.reached();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> sphere(Vertex center, int k)
{
    DistanceField field(center, k);
    std::vector<Vertex> out;
    for (Vertex v : field.reached())
        if (field.at(v) == k)
            out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

WindowGraph::WindowGraph(Vertex center, int radius)
    : center_(center), radius_(radius), field_(center, radius), vertices_(field_.reached())
{
    std::sort(vertices_.begin(), vertices_.end());
}

std::vector<Vertex> WindowGraph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    if (!contains(v))
        return out;
    for (Vertex w : hexspan::neighbors(v))
        if (contains(w))
            out.push_back(w);
    return out;
}

} // namespace hexspan
