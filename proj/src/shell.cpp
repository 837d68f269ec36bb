#include "hexspan/shell.hpp"

#include "hexspan/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hexspan {

namespace {

constexpr int ceil_half(int k) { return (k + 1) / 2; }
constexpr int floor_half(int k) { return k / 2; }

// Corner coordinates (local offsets) in order c1..c6.
std::array<Translation, 6> corner_offsets(int k)
{
    const int c = ceil_half(k);
    const int f = floor_half(k);
    return {{{0, k}, {c, f}, {c, -f}, {0, -k}, {-f, -c}, {-f, c}}};
}

} // namespace

std::optional<int> Ring::index_of(Vertex v) const
{
    const auto it = std::find(members_.begin(), members_.end(), v);
    if (it == members_.end())
        return std::nullopt;
    return static_cast<int>(it - members_.begin()) + 1;
}

std::span<const Vertex> Ring::group(int r) const
{
    const auto first = static_cast<std::size_t>(group_begin(r) - 1);
    const auto last = static_cast<std::size_t>(group_end(r) - 1);
    return std::span<const Vertex>(members_).subspan(first, last - first);
}

int Ring::group_of(int n) const
{
    for (int r = 1; r <= 6; ++r)
        if (n >= group_begin(r) && n < group_end(r))
            return r;
    throw std::out_of_range("member index " + std::to_string(n) + " outside ring");
}

bool Ring::is_corner(Vertex v) const
{
    if (!has_corners())
        return false;
    for (int c = 1; c <= 6; ++c)
        if (corner(c) == v)
            return true;
    return false;
}

std::vector<Vertex> Ring::corners() const
{
    std::vector<Vertex> out;
    if (has_corners())
        for (int c = 1; c <= 6; ++c)
            out.push_back(corner(c));
    return out;
}

std::vector<Vertex> Ring::non_corners() const
{
    std::vector<Vertex> out;
    for (Vertex v : members_)
        if (!is_corner(v))
            out.push_back(v);
    return out;
}

Ring build_ring(Vertex center, int k)
{
    if (k < 1)
        throw RangeError("k", "ring radius must be >= 1, got " + std::to_string(k));

    const Frame frame(center);
    const int c = ceil_half(k);
    const int f = floor_half(k);

    Ring ring;
    ring.center_ = center;
    ring.k_ = k;
    ring.members_.reserve(static_cast<std::size_t>(3 * k));
    auto add = [&](int di, int dj) { ring.members_.push_back(frame.to_world(di, dj)); };
    auto mark = [&](int r) { ring.group_start_[static_cast<std::size_t>(r - 1)] = static_cast<int>(ring.members_.size()) + 1; };

    mark(1);
    for (int m = 1; m <= c; ++m)
        add(m - 1, k - m + 1);
    mark(2);
    for (int m = 1; m <= f; ++m)
        add(c, f - 2 * m + 2);
    mark(3);
    for (int m = 1; m <= c; ++m)
        add(c - m + 1, -f - m + 1);
    mark(4);
    for (int m = 1; m <= f; ++m)
        add(-m + 1, -k + m - 1);
    mark(5);
    for (int m = 1; m <= c; ++m)
        add(-f, -c + 2 * m - 2);
    mark(6);
    for (int m = 1; m <= f; ++m)
        add(-f + m - 1, c + m - 1);
    ring.group_start_[6] = static_cast<int>(ring.members_.size()) + 1;

    if (k >= 2) {
        const auto offsets = corner_offsets(k);
        for (std::size_t idx = 0; idx < offsets.size(); ++idx) {
            const Vertex target = frame.to_world(offsets[idx].di, offsets[idx].dj);
            const auto n = ring.index_of(target);
            if (!n)
                throw std::logic_error("corner c" + std::to_string(idx + 1) + " not on ring k=" + std::to_string(k));
            ring.corner_index_[idx] = *n;
        }
    }
    return ring;
}

std::vector<Vertex> ring_union(Vertex center, int k_first, int k_last)
{
    std::vector<Vertex> out;
    for (int k = k_first; k <= k_last; ++k) {
        const Ring ring = build_ring(center, k);
        out.insert(out.end(), ring.members().begin(), ring.members().end());
    }
    return out;
}

DistanceClique build_clique(Vertex center, int p)
{
    if (p < 1)
        throw RangeError("p", "clique parameter must be >= 1, got " + std::to_string(p));
    DistanceClique clique{center, p, ball(center, p)};
    for (std::size_t a = 0; a < clique.members.size(); ++a) {
        if (distance_closed(center, clique.members[a]) > p)
            throw std::logic_error("clique member outside radius p");
        for (std::size_t b = a + 1; b < clique.members.size(); ++b)
            if (distance_closed(clique.members[a], clique.members[b]) > 2 * p)
                throw std::logic_error("clique pair farther than 2p");
    }
    return clique;
}

ShellSet build_shell(Vertex center, int k, int h)
{
    if (k < 5)
        throw RangeError("k", "shell sets need k >= 5, got " + std::to_string(k));
    return build_shell(build_ring(center, k), h);
}

ShellSet build_shell(const Ring& ring, int h)
{
    const int k = ring.k();
    if (k < 5)
        throw RangeError("k", "shell sets need k >= 5, got " + std::to_string(k));
    if (h == floor_half(k))
        throw RangeError("h", "h = floor(k/2) = " + std::to_string(h) + " reaches the corner vertices");
    if (h < 1 || h > floor_half(k) - 1)
        throw RangeError("h", "must lie in [1, " + std::to_string(floor_half(k) - 1) + "], got " + std::to_string(h));

    return shell_by_definition(ring, h);
}

ShellSet shell_by_definition(const Ring& ring, int h)
{
    ShellSet shell{ring.center(), ring.k(), h, {}, {}};
    const auto corners = ring.corners();
    for (int n = 1; n <= static_cast<int>(ring.size()); ++n) {
        const Vertex v = ring.member(n);
        if (ring.is_corner(v))
            continue;
        const bool hit = std::any_of(corners.begin(), corners.end(),
                                     [&](Vertex u) { return distance_closed(v, u) == 2 * h; });
        if (hit) {
            shell.members.push_back(v);
            shell.member_indices.push_back(n);
        }
    }
    return shell;
}

std::vector<Vertex> build_u_set(const Ring& ring, int h)
{
    std::vector<bool> in(ring.size() + 1, false);
    for (int c = 1; c <= 6; ++c)
        in[static_cast<std::size_t>(ring.corner_index(c))] = true;
    for (int r = 1; r <= h; ++r)
        for (int n : build_shell(ring, r).member_indices)
            in[static_cast<std::size_t>(n)] = true;
    std::vector<Vertex> out;
    for (int n = 1; n <= static_cast<int>(ring.size()); ++n)
        if (in[static_cast<std::size_t>(n)])
            out.push_back(ring.member(n));
    return out;
}

ReuseSet reuse_set(Vertex source, int p, std::span<const Vertex> target, std::optional<Vertex> center)
{
    if (p < 1)
        throw RangeError("p", "must be >= 1, got " + std::to_string(p));
    ReuseSet out{source, p, {}};
    for (Vertex u : target) {
        if (center && distance_closed(*center, u) <= p)
            throw RangeError("target", "target intersects the distance clique around the center");
        if (distance_closed(u, source) >= 2 * p + 1)
            out.members.push_back(u);
    }
    return out;
}

} // namespace hexspan
