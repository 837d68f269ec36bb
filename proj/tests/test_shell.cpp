#include "oracles.hpp"

#include "hexspan/errors.hpp"
#include "hexspan/shell.hpp"

#include <doctest.h>

#include <set>

using namespace hexspan;

namespace {

// Non-corner ring members at distance exactly 2h from some corner, by
// breadth-first search.
std::vector<int> shell_indices_oracle(const Ring& ring, int h)
{
    std::vector<std::map<Vertex, int>> from_corner;
    for (Vertex c : ring.corners())
        from_corner.push_back(oracle::bfs(c, 2 * h));
    std::vector<int> out;
    for (int n = 1; n <= static_cast<int>(ring.size()); ++n) {
        const Vertex v = ring.member(n);
        if (ring.is_corner(v))
            continue;
        for (const auto& dist : from_corner) {
            const auto it = dist.find(v);
            if (it != dist.end() && it->second == 2 * h) {
                out.push_back(n);
                break;
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("rings equal the breadth-first spheres")
{
    for (Vertex center : {Vertex{0, 0}, Vertex{1, 0}, Vertex{-2, 5}, Vertex{3, 4}}) {
        for (int k = 1; k <= 14; ++k) {
            const Ring ring = build_ring(center, k);
            const std::set<Vertex> got(ring.members().begin(), ring.members().end());
            REQUIRE(got.size() == ring.size());
            CHECK(got == oracle::sphere(center, k));
            CHECK(ring.size() == static_cast<std::size_t>(3 * k));
        }
    }
}

TEST_CASE("ring order walks around the ring")
{
    for (int k = 2; k <= 20; ++k) {
        const Ring ring = build_ring({0, 0}, k);
        const int n = static_cast<int>(ring.size());
        // Consecutive members are two steps apart, including the wrap.
        for (int m = 1; m <= n; ++m)
            CHECK(distance_closed(ring.member(m), ring.member(m % n + 1)) == 2);
    }
}

TEST_CASE("group partition and corners")
{
    for (int k = 1; k <= 25; ++k) {
        const Ring ring = build_ring({0, 0}, k);
        const int c = (k + 1) / 2;
        const int f = k / 2;
        CHECK(ring.group_begin(1) == 1);
        CHECK(ring.group_end(6) == 3 * k + 1);
        for (int r = 1; r <= 6; ++r) {
            CHECK(ring.group_end(r) - ring.group_begin(r) == (r % 2 ? c : f));
            if (r < 6)
                CHECK(ring.group_end(r) == ring.group_begin(r + 1));
            for (int n = ring.group_begin(r); n < ring.group_end(r); ++n)
                CHECK(ring.group_of(n) == r);
        }
        if (k < 2)
            continue;
        const std::vector<Vertex> expected = {{0, k}, {c, f}, {c, -f}, {0, -k}, {-f, -c}, {-f, c}};
        const std::vector<int> positions = {1, c + 1, k + 1, k + c + 1, 2 * k + 1, 2 * k + c + 1};
        for (int corner = 1; corner <= 6; ++corner) {
            CHECK(ring.corner(corner) == expected[corner - 1]);
            CHECK(ring.corner_index(corner) == positions[corner - 1]);
        }
        CHECK(ring.corners().size() == 6);
        CHECK(ring.non_corners().size() == static_cast<std::size_t>(3 * k - 6));
    }
}

TEST_CASE("corners of the radius-7 ring")
{
    const Ring ring = build_ring({0, 0}, 7);
    const std::vector<Vertex> expected = {{0, 7}, {4, 3}, {4, -3}, {0, -7}, {-3, -4}, {-3, 4}};
    CHECK(ring.corners() == expected);
}

TEST_CASE("left centres use the mirrored frame")
{
    const Vertex center{1, 0};
    REQUIRE(is_left(center));
    const Ring ring = build_ring(center, 5);
    const Ring origin = build_ring({0, 0}, 5);
    const Frame frame(center);
    for (int n = 1; n <= 15; ++n) {
        const Vertex local = origin.member(n);
        CHECK(ring.member(n) == frame.to_world(local.i, local.j));
        CHECK(frame.to_local(ring.member(n)) == Translation{local.i, local.j});
    }
}

TEST_CASE("index_of inverts member")
{
    const Ring ring = build_ring({4, -2}, 9);
    for (int n = 1; n <= 27; ++n)
        CHECK(ring.index_of(ring.member(n)) == n);
    CHECK_FALSE(ring.index_of({4, -2}).has_value());
}

TEST_CASE("distance cliques")
{
    for (int p = 1; p <= 8; ++p) {
        const DistanceClique clique = build_clique({1, 1}, p);
        CHECK(static_cast<long long>(clique.members.size()) == clique_size(p));
        CHECK(clique.members == oracle::ball({1, 1}, p));
        for (Vertex a : clique.members)
            for (Vertex b : clique.members)
                CHECK(distance_closed(a, b) <= 2 * p);
    }
    CHECK_THROWS_AS(build_clique({0, 0}, 0), RangeError);
    CHECK(clique_size(5) == 46);
    CHECK(clique_size(1) == 4);
    CHECK(clique_size(2) == 10);
}

TEST_CASE("shell of the radius-7 ring at distance 2")
{
    const Ring ring = build_ring({0, 0}, 7);
    const ShellSet shell = build_shell(ring, 1);
    CHECK(shell.member_indices == std::vector<int>{2, 4, 6, 7, 9, 11, 13, 14, 16, 18, 20, 21});
    CHECK(shell.members.size() == 12);
}

TEST_CASE("shells agree with the definition")
{
    for (int k = 5; k <= 25; ++k) {
        const Ring ring = build_ring({0, 0}, k);
        for (int h = 1; h <= k / 2 - 1; ++h) {
            const ShellSet shell = build_shell(ring, h);
            CHECK(shell.member_indices == shell_indices_oracle(ring, h));
            for (Vertex v : shell.members)
                CHECK_FALSE(ring.is_corner(v));
        }
    }
}

TEST_CASE("shell sizes off the twelve-vertex pattern")
{
    // Computed by the breadth-first oracle above.
    const std::vector<std::tuple<int, int, std::size_t>> frozen = {
        {5, 1, 9},  {7, 2, 9},  {9, 2, 9},  {11, 3, 9},  {13, 3, 9},  {8, 2, 6},
        {12, 3, 6}, {16, 4, 6}, {6, 1, 12}, {7, 1, 12},  {10, 2, 12}, {25, 6, 9},
    };
    for (const auto& [k, h, size] : frozen) {
        CAPTURE(k);
        CAPTURE(h);
        const Ring ring = build_ring({0, 0}, k);
        CHECK(shell_indices_oracle(ring, h).size() == size);
        CHECK(build_shell(ring, h).members.size() == size);
    }
    CHECK(shell_by_definition(build_ring({0, 0}, 4), 1).members.size() == 6);
}

TEST_CASE("u sets collect corners and inner shells")
{
    const Ring ring = build_ring({0, 0}, 11);
    const auto u = build_u_set(ring, 3);
    const auto corners = ring.corners();
    std::set<Vertex> expected(corners.begin(), corners.end());
    for (int h = 1; h <= 3; ++h)
        for (Vertex v : build_shell(ring, h).members)
            expected.insert(v);
    CHECK(std::set<Vertex>(u.begin(), u.end()) == expected);
    for (std::size_t n = 1; n < u.size(); ++n)
        CHECK(*ring.index_of(u[n - 1]) < *ring.index_of(u[n]));
}

TEST_CASE("reuse sets from the corner and v3 examples")
{
    const Ring f5 = build_ring({0, 0}, 5);
    const Ring f6 = build_ring({0, 0}, 6);
    const ReuseSet from_corner = reuse_set(f5.corner(1), 5, f6.members(), Vertex{0, 0});
    std::vector<int> indices;
    for (Vertex v : from_corner.members)
        indices.push_back(*f6.index_of(v));
    CHECK(indices == std::vector<int>{7, 8, 9, 10, 11, 12, 13});

    const Ring f7 = build_ring({0, 0}, 7);
    REQUIRE(f6.member(3) == Vertex{2, 4});
    const ReuseSet from_v3 = reuse_set(f6.member(3), 6, f7.members(), Vertex{0, 0});
    indices.clear();
    for (Vertex v : from_v3.members)
        indices.push_back(*f7.index_of(v));
    CHECK(indices == std::vector<int>{12, 13, 14, 15});
    for (Vertex v : from_v3.members)
        CHECK(distance_closed(v, f6.member(3)) >= 13);
}

TEST_CASE("domain errors")
{
    CHECK_THROWS_AS(build_ring({0, 0}, 0), RangeError);
    CHECK_THROWS_AS(build_shell({0, 0}, 4, 1), RangeError);
    CHECK_THROWS_AS(build_shell({0, 0}, 8, 4), RangeError);
    CHECK_THROWS_AS(build_shell({0, 0}, 8, 0), RangeError);
    try {
        build_shell({0, 0}, 8, 4);
    } catch (const RangeError& e) {
        CHECK(e.parameter() == "h");
    }
    const Ring f3 = build_ring({0, 0}, 3);
    CHECK_THROWS_AS(reuse_set({0, 0}, 3, f3.members(), Vertex{0, 0}), RangeError);
}
