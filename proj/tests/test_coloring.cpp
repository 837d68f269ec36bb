#include "oracles.hpp"

#include "hexspan/coloring.hpp"
#include "hexspan/errors.hpp"
#include "hexspan/exact_coloring.hpp"
#include "hexspan/lattice.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace hexspan;

TEST_CASE("hermite normal form from a basis")
{
    const Sublattice a = Sublattice::from_basis({2, 4}, {0, 6});
    CHECK(a == Sublattice::from_hnf(2, 4, 6));
    const Sublattice b = Sublattice::from_basis({4, 2}, {2, 8});
    CHECK(b.index() == std::abs(4 * 8 - 2 * 2));
    CHECK(b.contains({4, 2}));
    CHECK(b.contains({2, 8}));
    CHECK(b.contains({6, 10}));
    CHECK_FALSE(b.contains({1, 1}));
    CHECK(b.a() > 0);
    CHECK(b.b() >= 0);
    CHECK(b.b() < b.c());
    CHECK_THROWS_AS(Sublattice::from_basis({2, 2}, {4, 4}), RangeError);
    CHECK_THROWS_AS(Sublattice::from_hnf(1, 3, 2), RangeError);
}

TEST_CASE("reduce lands on the representative of the coset")
{
    const Sublattice lattice = Sublattice::from_hnf(3, 1, 4);
    const auto reps = lattice.representatives();
    CHECK(reps.size() == 12);
    for (std::size_t n = 0; n < reps.size(); ++n)
        CHECK(lattice.rep_index(reps[n]) == static_cast<int>(n));
    for (int i = -10; i <= 10; ++i)
        for (int j = -10; j <= 10; ++j) {
            const Vertex r = lattice.reduce({i, j});
            CHECK(lattice.contains(Vertex{i, j} - r));
            CHECK(r.i >= 0);
            CHECK(r.i < 3);
            CHECK(r.j >= 0);
            CHECK(r.j < 4);
        }
}

TEST_CASE("even sublattice enumeration matches a brute count")
{
    for (int n = 2; n <= 40; n += 2) {
        const auto list = even_sublattices(n);
        int brute = 0;
        for (int a = 1; a <= n; ++a)
            if (n % a == 0)
                for (int b = 0; b < n / a; ++b)
                    if ((a + b) % 2 == 0 && (n / a) % 2 == 0)
                        ++brute;
        CHECK(static_cast<int>(list.size()) == brute);
        for (const auto& s : list) {
            CHECK(s.index() == n);
            CHECK(s.within_even_lattice());
        }
    }
    CHECK(even_sublattices(7).empty());
}

TEST_CASE("vectors_near lists exactly the lattice points in the box")
{
    const Sublattice lattice = Sublattice::from_hnf(2, 2, 6);
    const Translation offset{1, -3};
    const auto got = lattice.vectors_near(offset, 7);
    std::size_t expected = 0;
    for (int di = -20; di <= 20; ++di)
        for (int dj = -20; dj <= 20; ++dj)
            if (lattice.contains({di, dj}) && std::abs(offset.di + di) <= 7 && std::abs(offset.dj + dj) <= 7)
                ++expected;
    CHECK(got.size() == expected);
}

TEST_CASE("exact colouring agrees with the brute-force chromatic number")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 9);
        std::vector<std::vector<int>> adj(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 100 < 45) {
                    adj[a].push_back(b);
                    adj[b].push_back(a);
                }
        const int chi = oracle::chromatic_number(adj);
        const SolveResult yes = color_exact(adj, chi, 1'000'000);
        REQUIRE(yes.status == SolveStatus::colorable);
        for (int a = 0; a < n; ++a)
            for (int b : adj[a])
                CHECK(yes.colors[a] != yes.colors[b]);
        if (chi > 1)
            CHECK(color_exact(adj, chi - 1, 1'000'000).status == SolveStatus::not_colorable);
    }
    const std::vector<std::vector<int>> triangle{{1, 2}, {0, 2}, {0, 1}};
    CHECK(color_exact(triangle, 3, 0).status == SolveStatus::node_limit);
}

TEST_CASE("power graph of a window")
{
    const auto window = ball({0, 0}, 3);
    const auto graph = power_graph(window, 4);
    long long edges = 0;
    for (const auto& row : graph)
        edges += static_cast<long long>(row.size());
    CHECK(edges / 2 == oracle::power_edges({0, 0}, 3, 4));
    CHECK(edges / 2 == 132);
}

TEST_CASE("window chromatic numbers")
{
    // Complete windows need every colour.
    CHECK_FALSE(exact_window_span(2, 1, 3).feasible);
    CHECK(exact_window_span(2, 1, 4).feasible);
    CHECK_FALSE(exact_window_span(4, 2, 9).feasible);
    CHECK(exact_window_span(4, 2, 10).feasible);
    // Radius-4 window under l = 4 (31 vertices): chromatic number 11.
    CHECK_FALSE(exact_window_span(4, 4, 10).feasible);
    const WindowSpanResult ok = exact_window_span(4, 4, 11);
    REQUIRE(ok.feasible);
    CHECK(ok.window_size == 31);
    CHECK(verify_window(*ok.coloring).ok());
    CHECK(ok.coloring->color_count() == 11);
    CHECK_THROWS_AS(exact_window_span(6, 12, 40), GuardError);
    CHECK_THROWS_AS(exact_window_span(6, 3, 19, 200, 1), GuardError);
}

TEST_CASE("single-coset search finds a verified colouring")
{
    for (int l : {1, 2, 3, 4, 5, 6}) {
        const auto found = search_lattice(l, 64, Execution::serial);
        REQUIRE(found.has_value());
        CHECK(found->mode() == LatticeMode::single_coset);
        CHECK(found->lattice.within_even_lattice());
        CHECK(verify_lattice(*found).ok());
        CHECK(verify_window(restrict_to_window(*found, {0, 0}, l + 3)).ok());
        // No smaller even index separates.
        for (int n = 2; n < found->lattice.index(); n += 2)
            for (const auto& s : even_sublattices(n))
                CHECK_FALSE(lattice_separates(s, l));
        CHECK(search_lattice(l, 64, Execution::parallel) == found);
    }
    CHECK_FALSE(search_lattice(8, 20).has_value());
}

TEST_CASE("lattice verification pinpoints planted conflicts")
{
    const auto base = search_lattice(4, 64);
    REQUIRE(base.has_value());
    LatticeColoring bad = *base;
    bad.colors[1] = bad.colors[0];
    const Verdict verdict = verify_lattice(bad);
    REQUIRE_FALSE(verdict.ok());
    const Vertex r0 = bad.lattice.representatives()[0];
    const Vertex r1 = bad.lattice.representatives()[1];
    for (const Violation& v : verdict.violations) {
        CHECK(v.distance <= 4);
        CHECK(v.distance == distance_closed(v.u, v.v));
        CHECK(bad.color_at(v.u) == bad.color_at(v.v));
        const bool involves = bad.lattice.reduce(v.u) == r0 || bad.lattice.reduce(v.u) == r1;
        CHECK(involves);
    }
    LatticeColoring odd = *base;
    odd.lattice = Sublattice::from_hnf(1, 0, 3);
    odd.colors = {1, 2, 3};
    CHECK_FALSE(verify_lattice(odd).problems.empty());
}

TEST_CASE("window verification lists each violating pair once")
{
    WindowColoring w;
    w.l = 2;
    for (Vertex v : ball({0, 0}, 2))
        w.assignment[v] = 1;
    const Verdict verdict = verify_window(w);
    CHECK(verdict.violations.size() == static_cast<std::size_t>(oracle::power_edges({0, 0}, 2, 2)));
    for (const Violation& v : verdict.violations)
        CHECK(v.u < v.v);
}

TEST_CASE("multi-domain fallback reaches the odd target for l = 8")
{
    const MultiDomainResult result = search_multi_domain(8, 33);
    REQUIRE(result.coloring.has_value());
    CHECK(result.coloring->color_count() == 33);
    CHECK(result.coloring->lattice.index() == 66);
    CHECK(result.coloring->mode() == LatticeMode::multi_domain);
    CHECK(verify_lattice(*result.coloring).ok());
    const MultiDomainResult serial = search_multi_domain(8, 33, {2, 2'000'000, Execution::serial});
    CHECK(serial.coloring == result.coloring);
    CHECK(serial.candidates == result.candidates);
}

TEST_CASE("periodic construction notes the mode")
{
    const PeriodicConstruction built = construct_periodic(8, 33, 40);
    REQUIRE(built.coloring.has_value());
    CHECK(built.best_single_coset == 38);
    CHECK(built.coloring->mode() == LatticeMode::multi_domain);
    CHECK_FALSE(built.notes.empty());
}
