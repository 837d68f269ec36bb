#include "oracles.hpp"

#include "hexspan/errors.hpp"
#include "hexspan/reuse.hpp"
#include "hexspan/shell.hpp"

#include <doctest.h>

using namespace hexspan;

TEST_CASE("spread search equals exhaustive scan on small reuse sets")
{
    for (int p = 4; p <= 7; ++p) {
        const Ring source = build_ring({0, 0}, p);
        const Ring target = build_ring({0, 0}, p + 1);
        for (Vertex v : source.members()) {
            const SpreadBound fast = max_spread(v, p, target.members());
            if (fast.reuse_size > 20)
                continue;
            const SpreadBound slow = max_spread_exhaustive(v, p, target.members());
            CHECK(fast.max_spread == slow.max_spread);
            CHECK(fast.reuse_size == slow.reuse_size);
            CHECK(static_cast<int>(fast.witness.size()) == fast.max_spread);
            for (Vertex w : fast.witness)
                CHECK(distance_closed(v, w) >= 2 * p + 1);
        }
    }
}

TEST_CASE("spread witnesses agree with the subset oracle")
{
    const int p = 5;
    for (int k : {6, 7}) {
        const auto target = build_ring({0, 0}, k).members();
        const Ring source = build_ring({0, 0}, 5);
        for (Vertex v : source.members()) {
            std::vector<Vertex> reuse;
            for (Vertex w : target)
                if (oracle::distance(v, w) >= 2 * p + 1)
                    reuse.push_back(w);
            const SpreadBound spread = max_spread(v, p, target);
            CHECK(spread.reuse_size == reuse.size());
            CHECK(spread.max_spread == oracle::far_subset_size(reuse, 2 * p + 1));
        }
    }
}

TEST_CASE("pair bound for distance-clique members")
{
    for (int p = 2; p <= 6; ++p) {
        const ObservationReport report = verify_observation_4(p, Execution::serial);
        CHECK(report.pass());
        CHECK(report.cases > 0);
    }
    CHECK_THROWS_AS(verify_observation_4(1), RangeError);
}

TEST_CASE("corner and non-corner reuse bounds hold on small p")
{
    for (int p = 4; p <= 7; ++p) {
        const ObservationReport corners = verify_corner_reuse(p);
        CHECK(corners.pass());
        CHECK(corners.cases == 6LL * (p - 1));
        CHECK(corners.maxima.rbegin()->first == 2);
        const ObservationReport others = verify_noncorner_reuse(p);
        CHECK(others.pass());
        CHECK(others.maxima.rbegin()->first <= 1);
    }
    const std::vector<int> bad_q{9};
    CHECK_THROWS_AS(verify_corner_reuse(5, bad_q), RangeError);
}

TEST_CASE("shell reuse: first shell of a full ring stays within two")
{
    const ShellReuseReports reports = verify_shell_reuse(7, 0, 1);
    CHECK(reports.shell.pass());
    CHECK(reports.shell.maxima.rbegin()->first == 2);
    REQUIRE(reports.rest.has_value());
    CHECK(reports.rest->pass());
    CHECK(reports.rest->maxima.rbegin()->first == 1);
    // On the radius-6 ring every non-corner vertex is in the first shell.
    CHECK_FALSE(verify_shell_reuse(6, 0, 1).rest.has_value());
}

TEST_CASE("shell reuse: frozen breaches")
{
    // Maxima found by exhaustive search: a degenerate nine-vertex shell and
    // deeper shells both allow three reuses.
    const ShellReuseReports degenerate = verify_shell_reuse(5, 0, 1);
    CHECK_FALSE(degenerate.shell.pass());
    CHECK(degenerate.shell.maxima == std::map<int, long long>{{2, 6}, {3, 3}});
    CHECK(degenerate.shell.counterexamples.front().source == Vertex{3, 0});

    const ShellReuseReports deep = verify_shell_reuse(6, 0, 2);
    CHECK(deep.shell.maxima.rbegin()->first == 3);
    CHECK_FALSE(deep.shell.pass());

    const ShellReuseReports rest = verify_shell_reuse(7, 0, 2);
    REQUIRE(rest.rest.has_value());
    CHECK(rest.rest->maxima.rbegin()->first == 2);

    CHECK_THROWS_AS(verify_shell_reuse(6, 2, 1), RangeError);
    CHECK_THROWS_AS(verify_shell_reuse(6, 0, 3), RangeError);
}

TEST_CASE("serial and parallel verification agree")
{
    for (int p : {5, 7}) {
        const auto a = verify_shell_reuse_all(p, Execution::serial);
        const auto b = verify_shell_reuse_all(p, Execution::parallel);
        CHECK(a.shell.maxima == b.shell.maxima);
        CHECK(a.shell.counterexamples.size() == b.shell.counterexamples.size());
        CHECK(verify_corner_reuse(p, {}, Execution::serial).maxima == verify_corner_reuse(p, {}, Execution::parallel).maxima);
    }
}

TEST_CASE("corner exclusion pairs")
{
    const CornerExclusion ex = verify_corner_exclusion(5);
    CHECK(ex.report.pass());
    const std::array<std::vector<std::pair<int, int>>, 6> expected = {{
        {{7, 13}}, {{10, 16}}, {{1, 13}}, {{4, 16}}, {{1, 7}}, {{4, 10}},
    }};
    CHECK(ex.double_reuse == expected);
    for (int p = 4; p <= 9; ++p) {
        const CornerExclusion e = verify_corner_exclusion(p);
        CHECK(e.report.pass());
        for (int a = 0; a < 6; ++a) {
            CHECK(e.double_reuse[a].size() == 1);
            CHECK_FALSE(e.compatible[a][a]);
            for (int b = 0; b < 6; ++b)
                if (a != b && a % 2 == b % 2)
                    CHECK_FALSE(e.compatible[a][b]);
        }
        CHECK(e.compatible[0][1]);
        CHECK(e.compatible[0][3]);
        CHECK(e.compatible[2][5]);
    }
}

TEST_CASE("counting certificate budget lines")
{
    for (int p = 4; p <= 12; ++p) {
        const ColorCountCertificate cert = theorem_color_count(p);
        CHECK(cert.final_count == clique_size(p) + p / 2);
        CHECK(cert.thm1.pass());
        CHECK(cert.rows.size() == static_cast<std::size_t>(p / 2 - 1));
        for (const BudgetRow& row : cert.rows) {
            CHECK(row.ring_size == 3LL * (p + 2 * row.r + 1));
            CHECK(row.deficit == 3);
            CHECK(row.paired_deficit == 6);
        }
    }
    CHECK(theorem_color_count(6).thm2.pass());
    CHECK_FALSE(theorem_color_count(5).thm2.pass());
    CHECK_THROWS_AS(theorem_color_count(3), RangeError);
}
