#pragma once

// Finite, exhaustive checks of the reuse bounds and of the counting
// skeleton behind the lower bound, for concrete p.
//
// "The colour of v can be reused at most N times in T" is checked as
// max_spread(v, p, T) <= N: the largest subset of the reuse set R_v^T whose
// members are pairwise at distance >= 2p + 1.

#include "hexspan/execution.hpp"
#include "hexspan/grid.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hexspan {

struct SpreadBound {
    Vertex source;
    int p = 0;
    std::string target;
    std::size_t reuse_size = 0;
    int max_spread = 0;
    std::vector<Vertex> witness;
};

SpreadBound max_spread(Vertex source, int p, std::span<const Vertex> target, std::string target_label = {});

// Same quantity by scanning every subset of the reuse set, with distances
// from breadth-first search. Throws GuardError when the reuse set exceeds 20.
SpreadBound max_spread_exhaustive(Vertex source, int p, std::span<const Vertex> target, std::string target_label = {});

enum class ObservationId {
    obs4,
    obs5,
    obs6,
    obs7,
    obs8,
    thm1_exclusion,
    thm1_count,
    thm2_count,
    thm3_count,
};

std::string to_string(ObservationId id);

struct Counterexample {
    Vertex source;
    int observed = 0;
    int bound = 0;
    std::string context;
    std::vector<Vertex> witness;
};

struct ObservationReport {
    ObservationId id = ObservationId::obs4;
    int p = 0;
    std::vector<std::pair<std::string, std::string>> params;
    std::map<int, long long> maxima;  // observed value -> number of cases
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;
    long long cases = 0;

    bool pass() const { return counterexamples.empty(); }
};

// Every v1 in D_x^{2p} and v2 outside with d(v1,x) + d(v2,x) < 2p+1 is
// confirmed to satisfy d(v1, v2) < 2p + 1. Requires p >= 2.
ObservationReport verify_observation_4(int p, Execution exec = Execution::parallel);

// Corners of F_{x,p-q} have spread <= 2 into F_{x,p+q+1}; q in [0, p-2].
// An empty q list means every valid q.
ObservationReport verify_corner_reuse(int p, std::span<const int> q_values = {}, Execution exec = Execution::parallel);

// Non-corners of F_{x,p-q} have spread <= 1 into F_{x,p+q+1}; q in [0, p-3].
ObservationReport verify_noncorner_reuse(int p, std::span<const int> q_values = {}, Execution exec = Execution::parallel);

struct ShellReuseReports {
    ObservationReport shell;                  // members of S_{x,p-q}^{2r}, bound 2
    std::optional<ObservationReport> rest;    // F^nc \ S, bound 1; only when q <= p-5
};

// Spreads into the union of F_{x,p+q+h} for h = 1..2r+1. Requires
// 0 <= q <= p-4, p-q >= 5 (shell sets need k >= 5), 1 <= r <= floor((p-q)/2) - 1.
ShellReuseReports verify_shell_reuse(int p, int q, int r, Execution exec = Execution::parallel);

// All valid (q, r) for this p, merged into one report per bound.
ShellReuseReports verify_shell_reuse_all(int p, Execution exec = Execution::parallel);

// Joint double reuse of two corner colours of F_{x,p} into F_{x,p+1}.
struct CornerExclusion {
    int p = 0;
    // For each corner c1..c6 of F_{x,p}: the pairs of F_{x,p+1} member
    // indices where its colour can be placed twice.
    std::array<std::vector<std::pair<int, int>>, 6> double_reuse;
    // compatible[a][b]: corners a and b can both be doubly reused at once.
    std::array<std::array<bool, 6>, 6> compatible{};
    ObservationReport report;
};

CornerExclusion verify_corner_exclusion(int p);

// One budget line of the counting argument.
struct BudgetRow {
    int r = 0;
    long long slots = 0;        // 3p + 6r
    long long ring_size = 0;    // |F_{x,p+2r+1}|
    long long deficit = 0;
    long long paired_slots = 0; // (3p+6r) + (3p+6r-3)
    long long paired_size = 0;  // |F_{x,p+2r}| + |F_{x,p+2r+1}|
    long long paired_deficit = 0;
    long long noncorner_size = 0;               // |F^nc_{x,p-2r}|
    std::vector<std::pair<std::string, long long>> shell_sizes;  // S sets summed into 12r and 12(r-1)
};

struct ColorCountCertificate {
    int p = 0;
    long long clique_size = 0;
    long long new_colors = 0;  // floor(p/2)
    long long final_count = 0;
    std::vector<BudgetRow> rows;
    ObservationReport thm1;
    ObservationReport thm2;
    ObservationReport thm3;

    bool pass() const { return thm1.pass() && thm2.pass() && thm3.pass(); }
};

// Requires p >= 4.
ColorCountCertificate theorem_color_count(int p);

} // namespace hexspan
