#pragma once

// l-distance colourings of T_H: periodic colourings over a sublattice of the
// even translation lattice, explicit colourings of finite windows, their
// verification, and exact searches.

#include "hexspan/execution.hpp"
#include "hexspan/grid.hpp"
#include "hexspan/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hexspan {

enum class LatticeMode { single_coset, multi_domain };

std::string to_string(LatticeMode mode);

// Periodic colouring: the colour of v is colors[rep_index(reduce(v))].
// When every representative has its own colour each colour class is one
// coset of the sublattice (single-coset mode); otherwise several cosets
// share a colour (multi-domain mode).
struct LatticeColoring {
    int l = 0;
    Sublattice lattice = Sublattice::from_hnf(1, 0, 1);
    std::vector<int> colors;  // 1-based colours, one per representative

    int color_at(Vertex v) const;
    int color_count() const;
    LatticeMode mode() const;

    friend bool operator==(const LatticeColoring&, const LatticeColoring&) = default;
};

struct WindowColoring {
    int l = 0;
    std::map<Vertex, int> assignment;

    int color_count() const;

    friend bool operator==(const WindowColoring&, const WindowColoring&) = default;
};

struct Violation {
    Vertex u;
    Vertex v;
    int distance = 0;

    friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct Verdict {
    std::vector<Violation> violations;
    std::vector<std::string> problems;  // structural defects (e.g. an odd basis vector)

    bool ok() const { return violations.empty() && problems.empty(); }
};

// Every same-coloured pair at distance <= l, found by checking, for each
// same-coloured pair of representatives, every lattice translate within
// coordinate norm 2l + 2. Violations are listed with u the representative.
Verdict verify_lattice(const LatticeColoring& coloring);

// Every pair of window vertices at distance <= l sharing a colour.
Verdict verify_window(const WindowColoring& coloring);

// Materialises a periodic colouring on the ball of the given radius.
WindowColoring restrict_to_window(const LatticeColoring& coloring, Vertex center, int radius);

// True when no nonzero lattice vector joins two vertices at distance <= l
// (checked from a representative of each handedness).
bool lattice_separates(const Sublattice& lattice, int l);

// Single-coset search: even indices 2, 4, ... up to max_index, candidates
// in lexicographic Hermite-normal-form order; the first separating lattice
// wins. Parallel candidate evaluation returns the same answer.
std::optional<LatticeColoring> search_lattice(int l, int max_index, Execution exec = Execution::parallel);

struct MultiDomainOptions {
    int multiplier = 2;                      // fundamental domain holds multiplier * colors vertices
    long long node_limit = 2'000'000;        // per candidate lattice
    Execution exec = Execution::parallel;
};

struct MultiDomainResult {
    std::optional<LatticeColoring> coloring;
    long long candidates = 0;
    long long separating = 0;
    long long infeasible = 0;
    long long undecided = 0;  // node limit reached; no claim made
};

// Multi-domain search: sublattices of index multiplier * colors, each
// fundamental domain coloured exactly with `colors` colours against
// wrap-around distances on the quotient.
MultiDomainResult search_multi_domain(int l, int colors, const MultiDomainOptions& options = {});

struct PeriodicConstruction {
    int l = 0;
    int target = 0;
    std::optional<LatticeColoring> coloring;
    std::optional<int> best_single_coset;  // smallest separating index found up to max_index
    std::vector<std::string> notes;
};

// Tries single-coset mode up to max_index, then multi-domain mode with
// multipliers 2..max_multiplier at exactly `target` colours.
PeriodicConstruction construct_periodic(int l, int target, int max_index, int max_multiplier = 3,
                                        Execution exec = Execution::parallel);

struct WindowSpanResult {
    bool feasible = false;
    std::optional<WindowColoring> coloring;
    long long nodes = 0;
    std::size_t window_size = 0;
};

// Decides whether the l-th power of the radius ball around the origin is
// colourable with `budget` colours. Throws GuardError when the window has
// more than `guard` vertices or the search exceeds `node_limit` nodes.
WindowSpanResult exact_window_span(int l, int radius, int budget, int guard = 200, long long node_limit = 50'000'000);

// Conflict graph of the window's l-th power, vertices in ball() order.
std::vector<std::vector<int>> power_graph(const std::vector<Vertex>& window, int l);

} // namespace hexspan
