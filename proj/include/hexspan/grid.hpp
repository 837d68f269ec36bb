#pragma once

// Coordinate model of the infinite hexagonal grid (brick-wall embedding).
//
// Vertex (i, j) always has the vertical neighbours (i, j+1) and (i, j-1).
// Its horizontal neighbour is (i+1, j) when (i+j) is even (a right vertex)
// and (i-1, j) when (i+j) is odd (a left vertex).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hexspan {

struct Translation {
    int di = 0;
    int dj = 0;

    friend constexpr bool operator==(Translation, Translation) = default;

    // Translations with di + dj even map right vertices to right vertices
    // and are therefore graph automorphisms.
    constexpr bool preserves_handedness() const { return ((di + dj) & 1) == 0; }
};

struct Vertex {
    int i = 0;
    int j = 0;

    friend constexpr auto operator<=>(Vertex, Vertex) = default;
    friend constexpr bool operator==(Vertex, Vertex) = default;
};

constexpr Vertex operator+(Vertex v, Translation t) { return {v.i + t.di, v.j + t.dj}; }
constexpr Vertex operator-(Vertex v, Translation t) { return {v.i - t.di, v.j - t.dj}; }
constexpr Translation operator-(Vertex a, Vertex b) { return {a.i - b.i, a.j - b.j}; }

constexpr int parity(Vertex v) { return (v.i + v.j) & 1; }
constexpr bool is_right(Vertex v) { return parity(v) == 0; }
constexpr bool is_left(Vertex v) { return parity(v) == 1; }

constexpr std::array<Vertex, 3> neighbors(Vertex v)
{
    const Vertex horizontal = is_right(v) ? Vertex{v.i + 1, v.j} : Vertex{v.i - 1, v.j};
    return {horizontal, Vertex{v.i, v.j + 1}, Vertex{v.i, v.j - 1}};
}

constexpr bool adjacent(Vertex u, Vertex v)
{
    for (Vertex w : neighbors(u))
        if (w == v)
            return true;
    return false;
}

// Closed-form graph distance.
//
// When |di| <= |dj| the horizontal steps can be interleaved with vertical
// ones and the distance is |di| + |dj|. Otherwise every horizontal step must
// be separated by a vertical one; the start pays an extra step if it cannot
// leave in the direction of travel and the end pays one if it cannot be
// entered from that direction. Travelling east (di > 0) this is
// 2|di| + parity(u) - parity(v); travelling west the roles swap.
constexpr int distance_closed(Vertex u, Vertex v)
{
    const int di = v.i - u.i;
    const int dj = v.j - u.j;
    const int adi = di < 0 ? -di : di;
    const int adj = dj < 0 ? -dj : dj;
    if (adi <= adj)
        return adi + adj;
    if (di > 0)
        return 2 * adi + parity(u) - parity(v);
    return 2 * adi + parity(v) - parity(u);
}

// Exact single-source distances by breadth-first search, restricted to
// vertices within `radius` of the source. Entries beyond the radius read -1.
class DistanceField {
public:
    DistanceField(Vertex source, int radius);

    Vertex source() const { return source_; }
    int radius() const { return radius_; }

    // -1 when v is farther than radius().
    int at(Vertex v) const;

    // Every vertex reached, in breadth-first order.
    const std::vector<Vertex>& reached() const { return order_; }

private:
    Vertex source_;
    int radius_;
    int side_;
    std::vector<std::int32_t> dist_;
    std::vector<Vertex> order_;

    std::ptrdiff_t slot(Vertex v) const;
};

// Exact distance by breadth-first search. Starts with a window of radius
// |di| + |dj| and widens it by 4 until the target is reached.
int distance_bfs(Vertex u, Vertex v);

// All vertices within distance `radius` of `center`, sorted lexicographically.
std::vector<Vertex> ball(Vertex center, int radius);

// Vertices at distance exactly k from center, sorted lexicographically.
std::vector<Vertex> sphere(Vertex center, int k);

// The induced subgraph of T_H on the radius-ball around a center.
class WindowGraph {
public:
    WindowGraph(Vertex center, int radius);

    Vertex center() const { return center_; }
    int radius() const { return radius_; }
    bool contains(Vertex v) const { return field_.at(v) >= 0; }
    const std::vector<Vertex>& vertices() const { return vertices_; }

    // Neighbours of v that lie inside the window.
    std::vector<Vertex> neighbors(Vertex v) const;

private:
    Vertex center_;
    int radius_;
    DistanceField field_;
    std::vector<Vertex> vertices_;
};

} // namespace hexspan

template <>
struct std::hash<hexspan::Vertex> {
    std::size_t operator()(hexspan::Vertex v) const noexcept
    {
        const auto a = static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.i));
        const auto b = static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.j));
        return std::hash<std::uint64_t>{}((a << 32) | b);
    }
};
