#pragma once

// Vertex sets used by the reuse-counting arguments: rings around a center,
// their six-group partition and corners, distance cliques, shell sets S and
// U, and reuse sets.

#include "hexspan/grid.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace hexspan {

// Local coordinates around a center. For a right center (a, b) the offset
// (di, dj) is the vertex (a + di, b + dj); for a left center it is
// (a - di, b + dj). Both maps are graph isomorphisms that send the origin
// of a right-centred picture to the center.
class Frame {
public:
    explicit constexpr Frame(Vertex center) : center_(center), orientation_(is_right(center) ? 1 : -1) {}

    constexpr Vertex center() const { return center_; }
    constexpr Vertex to_world(int di, int dj) const { return {center_.i + orientation_ * di, center_.j + dj}; }
    constexpr Translation to_local(Vertex v) const { return {orientation_ * (v.i - center_.i), v.j - center_.j}; }

private:
    Vertex center_;
    int orientation_;
};

// F_{x,k}: the 3k vertices at distance k from a center, ordered by the
// index scheme n = 1..3k. Members n in [group_begin(r), group_end(r)) form
// group G^r. Corners exist for k >= 2.
class Ring {
public:
    Vertex center() const { return center_; }
    int k() const { return k_; }

    const std::vector<Vertex>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

    // 1-based member index.
    Vertex member(int n) const { return members_.at(static_cast<std::size_t>(n - 1)); }
    std::optional<int> index_of(Vertex v) const;

    // Groups are 1..6; index ranges are 1-based and half-open.
    int group_begin(int r) const { return group_start_.at(static_cast<std::size_t>(r - 1)); }
    int group_end(int r) const { return group_start_.at(static_cast<std::size_t>(r)); }
    std::span<const Vertex> group(int r) const;
    int group_of(int n) const;

    bool has_corners() const { return k_ >= 2; }
    // 1-based member index of corner c in 1..6.
    int corner_index(int c) const { return corner_index_.at(static_cast<std::size_t>(c - 1)); }
    Vertex corner(int c) const { return member(corner_index(c)); }
    bool is_corner(Vertex v) const;
    std::vector<Vertex> corners() const;
    std::vector<Vertex> non_corners() const;

private:
    friend Ring build_ring(Vertex center, int k);

    Vertex center_;
    int k_ = 0;
    std::vector<Vertex> members_;
    std::array<int, 7> group_start_{};
    std::array<int, 6> corner_index_{};
};

// Builds F_{x,k} from the group coordinate formulas. Corners are located by
// searching the members for the six corner coordinate conditions.
// Throws RangeError for k < 1.
Ring build_ring(Vertex center, int k);

// Concatenation of rings k_first..k_last.
std::vector<Vertex> ring_union(Vertex center, int k_first, int k_last);

// D_x^{2p}: every vertex within distance p of the center. Construction checks
// both defining conditions (radius p and pairwise distance <= 2p).
struct DistanceClique {
    Vertex center;
    int p = 0;
    std::vector<Vertex> members;
};

DistanceClique build_clique(Vertex center, int p);

constexpr long long clique_size(long long p) { return 1 + 3 * p * (p + 1) / 2; }

// S_{x,k}^{2h}: non-corner vertices of F_{x,k} at distance exactly 2h from
// some corner, ordered by ring index.
struct ShellSet {
    Vertex center;
    int k = 0;
    int h = 0;
    std::vector<Vertex> members;
    std::vector<int> member_indices;
};

// Requires k >= 5 and 1 <= h <= floor(k/2) - 1.
ShellSet build_shell(Vertex center, int k, int h);

// Shell membership by definition with no domain check on k or h. The
// counting certificate uses it for the k = 4 rings its argument reaches.
ShellSet shell_by_definition(const Ring& ring, int h);
ShellSet build_shell(const Ring& ring, int h);

// U_{x,k}^{2h}: corners together with S^2, S^4, ..., S^{2h}, ordered by ring index.
std::vector<Vertex> build_u_set(const Ring& ring, int h);

// R_v^S: members of target at distance >= 2p + 1 from source, in target order.
struct ReuseSet {
    Vertex source;
    int p = 0;
    std::vector<Vertex> members;
};

// When `center` is given, checks that target avoids the clique D_center^{2p}.
ReuseSet reuse_set(Vertex source, int p, std::span<const Vertex> target, std::optional<Vertex> center = std::nullopt);

} // namespace hexspan
