#include "hexspan/coloring.hpp"

#include "hexspan/errors.hpp"
#include "hexspan/exact_coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hexspan {

namespace {

bool lex_positive(Translation t) { return t.di > 0 || (t.di == 0 && t.dj > 0); }

// Offsets to every vertex within distance l, for a right (index 0) and a
// left (index 1) starting vertex, found by breadth-first search.
struct BallOffsets {
    std::vector<Translation> by_parity[2];
    std::vector<int> distance[2];

    explicit BallOffsets(int l)
    {
        const Vertex starts[2] = {{0, 0}, {1, 0}};
        for (int side = 0; side < 2; ++side) {
            const DistanceField field(starts[side], l);
            for (Vertex v : field.reached()) {
                if (v == starts[side])
                    continue;
                by_parity[side].push_back(v - starts[side]);
                distance[side].push_back(field.at(v));
            }
        }
    }
};

} // namespace

std::string to_string(LatticeMode mode)
{
    return mode == LatticeMode::single_coset ? "single-coset" : "multi-domain";
}

int LatticeColoring::color_at(Vertex v) const
{
    return colors.at(static_cast<std::size_t>(lattice.rep_index(lattice.reduce(v))));
}

int LatticeColoring::color_count() const
{
    return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
}

LatticeMode LatticeColoring::mode() const
{
    return color_count() == lattice.index() ? LatticeMode::single_coset : LatticeMode::multi_domain;
}

int WindowColoring::color_count() const
{
    std::set<int> used;
    for (const auto& [v, c] : assignment)
        used.insert(c);
    return static_cast<int>(used.size());
}

Verdict verify_lattice(const LatticeColoring& coloring)
{
    Verdict verdict;
    const Sublattice& lattice = coloring.lattice;
    const int l = coloring.l;
    if (!lattice.within_even_lattice())
        verdict.problems.push_back("basis vectors must have even coordinate sums (handedness-preserving translations)");
    if (coloring.colors.size() != static_cast<std::size_t>(lattice.index())) {
        verdict.problems.push_back("expected " + std::to_string(lattice.index()) + " representative colours, got " +
                                   std::to_string(coloring.colors.size()));
        return verdict;
    }
    const int bound = 2 * l + 2;
    const auto reps = lattice.representatives();
    for (std::size_t a = 0; a < reps.size(); ++a) {
        for (std::size_t b = a; b < reps.size(); ++b) {
            if (coloring.colors[a] != coloring.colors[b])
                continue;
            const Translation base = reps[b] - reps[a];
            for (Translation t : lattice.vectors_near(base, bound)) {
                const Translation delta{base.di + t.di, base.dj + t.dj};
                if (a == b && !lex_positive(delta))
                    continue;
                const Vertex u = reps[a];
                const Vertex w = u + delta;
                const int d = distance_closed(u, w);
                if (d <= l)
                    verdict.violations.push_back({u, w, d});
            }
        }
    }
    std::sort(verdict.violations.begin(), verdict.violations.end());
    return verdict;
}

Verdict verify_window(const WindowColoring& coloring)
{
    Verdict verdict;
    const BallOffsets offsets(coloring.l);
    for (const auto& [v, color] : coloring.assignment) {
        const int side = parity(v);
        const auto& list = offsets.by_parity[side];
        for (std::size_t k = 0; k < list.size(); ++k) {
            if (!lex_positive(list[k]))
                continue;
            const Vertex w = v + list[k];
            const auto it = coloring.assignment.find(w);
            if (it == coloring.assignment.end() || it->second != color)
                continue;
            const int d = distance_closed(v, w);
            if (d != offsets.distance[side][k])
                throw std::logic_error("distance audit failed between closed form and search");
            verdict.violations.push_back({v, w, d});
        }
    }
    std::sort(verdict.violations.begin(), verdict.violations.end());
    return verdict;
}

WindowColoring restrict_to_window(const LatticeColoring& coloring, Vertex center, int radius)
{
    WindowColoring out;
    out.l = coloring.l;
    for (Vertex v : ball(center, radius))
        out.assignment.emplace(v, coloring.color_at(v));
    return out;
}

bool lattice_separates(const Sublattice& lattice, int l)
{
    if (!lattice.within_even_lattice())
        return false;
    const Vertex starts[2] = {{0, 0}, {1, 0}};
    for (Translation t : lattice.vectors_near({0, 0}, 2 * l + 2)) {
        if (t.di == 0 && t.dj == 0)
            continue;
        for (Vertex s : starts)
            if (distance_closed(s, s + t) <= l)
                return false;
    }
    return true;
}

std::optional<LatticeColoring> search_lattice(int l, int max_index, Execution exec)
{
    if (l < 1)
        throw RangeError("l", "must be >= 1, got " + std::to_string(l));
    if (max_index < 1)
        throw RangeError("max-index", "must be >= 1, got " + std::to_string(max_index));
    for (int n = 2; n <= max_index; n += 2) {
        const auto candidates = even_sublattices(n);
        const auto ok = indexed_map<char>(candidates.size(), exec,
                                          [&](std::size_t idx) { return static_cast<char>(lattice_separates(candidates[idx], l)); });
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            if (!ok[idx])
                continue;
            LatticeColoring out{l, candidates[idx], {}};
            out.colors.resize(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k)
                out.colors[static_cast<std::size_t>(k)] = k + 1;
            return out;
        }
    }
    return std::nullopt;
}

namespace {

// Conflict graph of the quotient T_H / lattice: representatives u and v
// conflict when some translate of v lies within distance l of u.
std::vector<std::vector<int>> quotient_graph(const Sublattice& lattice, int l)
{
    const auto reps = lattice.representatives();
    const int bound = 2 * l + 2;
    std::vector<std::vector<int>> adj(reps.size());
    for (std::size_t a = 0; a < reps.size(); ++a) {
        for (std::size_t b = a + 1; b < reps.size(); ++b) {
            const Translation base = reps[b] - reps[a];
            bool conflict = false;
            for (Translation t : lattice.vectors_near(base, bound)) {
                const Vertex w = reps[a] + Translation{base.di + t.di, base.dj + t.dj};
                if (distance_closed(reps[a], w) <= l) {
                    conflict = true;
                    break;
                }
            }
            if (conflict) {
                adj[a].push_back(static_cast<int>(b));
                adj[b].push_back(static_cast<int>(a));
            }
        }
    }
    return adj;
}

struct CandidateOutcome {
    enum Kind : char { not_separating, infeasible, undecided, found } kind = not_separating;
    std::vector<int> colors;
};

} // namespace

MultiDomainResult search_multi_domain(int l, int colors, const MultiDomainOptions& options)
{
    if (l < 1)
        throw RangeError("l", "must be >= 1, got " + std::to_string(l));
    if (colors < 1)
        throw RangeError("colors", "must be >= 1, got " + std::to_string(colors));
    if (options.multiplier < 1)
        throw RangeError("multiplier", "must be >= 1, got " + std::to_string(options.multiplier));

    MultiDomainResult result;
    const int n = colors * options.multiplier;
    const auto candidates = even_sublattices(n);
    constexpr std::size_t chunk = 8;
    for (std::size_t first = 0; first < candidates.size(); first += chunk) {
        const std::size_t count = std::min(chunk, candidates.size() - first);
        const auto outcomes = indexed_map<CandidateOutcome>(count, options.exec, [&](std::size_t k) {
            const Sublattice& lattice = candidates[first + k];
            CandidateOutcome out;
            if (!lattice_separates(lattice, l))
                return out;
            const auto solved = color_exact(quotient_graph(lattice, l), colors, options.node_limit);
            switch (solved.status) {
            case SolveStatus::colorable:
                out.kind = CandidateOutcome::found;
                out.colors = solved.colors;
                break;
            case SolveStatus::not_colorable: out.kind = CandidateOutcome::infeasible; break;
            case SolveStatus::node_limit: out.kind = CandidateOutcome::undecided; break;
            }
            return out;
        });
        for (std::size_t k = 0; k < count; ++k) {
            ++result.candidates;
            const auto& out = outcomes[k];
            if (out.kind == CandidateOutcome::not_separating)
                continue;
            ++result.separating;
            if (out.kind == CandidateOutcome::infeasible) {
                ++result.infeasible;
            } else if (out.kind == CandidateOutcome::undecided) {
                ++result.undecided;
            } else {
                LatticeColoring coloring{l, candidates[first + k], {}};
                for (int c : out.colors)
                    coloring.colors.push_back(c + 1);
                result.coloring = std::move(coloring);
                return result;
            }
        }
    }
    return result;
}

PeriodicConstruction construct_periodic(int l, int target, int max_index, int max_multiplier, Execution exec)
{
    PeriodicConstruction out;
    out.l = l;
    out.target = target;
    if (auto single = search_lattice(l, max_index, exec)) {
        out.best_single_coset = single->lattice.index();
        if (single->lattice.index() <= target) {
            out.notes.push_back("single-coset lattice of index " + std::to_string(single->lattice.index()) + " found");
            out.coloring = std::move(single);
            return out;
        }
        out.notes.push_back("best single-coset index " + std::to_string(*out.best_single_coset) + " exceeds target " +
                            std::to_string(target));
    } else {
        out.notes.push_back("no single-coset lattice up to index " + std::to_string(max_index));
    }
    if (target % 2 != 0)
        out.notes.push_back("single-coset colourings have even index, so odd target " + std::to_string(target) +
                            " needs several cosets per colour");
    for (int m = 2; m <= max_multiplier; ++m) {
        MultiDomainOptions options;
        options.multiplier = m;
        options.exec = exec;
        const auto found = search_multi_domain(l, target, options);
        out.notes.push_back("multi-domain x" + std::to_string(m) + ": " + std::to_string(found.candidates) + " candidates, " +
                            std::to_string(found.separating) + " separating, " + std::to_string(found.infeasible) +
                            " infeasible, " + std::to_string(found.undecided) + " undecided");
        if (found.coloring) {
            out.coloring = found.coloring;
            return out;
        }
    }
    return out;
}

std::vector<std::vector<int>> power_graph(const std::vector<Vertex>& window, int l)
{
    std::vector<std::vector<int>> adj(window.size());
    for (std::size_t a = 0; a < window.size(); ++a)
        for (std::size_t b = a + 1; b < window.size(); ++b)
            if (distance_closed(window[a], window[b]) <= l) {
                adj[a].push_back(static_cast<int>(b));
                adj[b].push_back(static_cast<int>(a));
            }
    return adj;
}

WindowSpanResult exact_window_span(int l, int radius, int budget, int guard, long long node_limit)
{
    if (l < 1)
        throw RangeError("l", "must be >= 1, got " + std::to_string(l));
    if (radius < 1)
        throw RangeError("radius", "must be >= 1, got " + std::to_string(radius));
    if (budget < 1)
        throw RangeError("budget", "must be >= 1, got " + std::to_string(budget));
    const auto window = ball({0, 0}, radius);
    if (window.size() > static_cast<std::size_t>(guard))
        throw GuardError("window of radius " + std::to_string(radius) + " has " + std::to_string(window.size()) +
                         " vertices, above the guard of " + std::to_string(guard));
    const auto solved = color_exact(power_graph(window, l), budget, node_limit);
    if (solved.status == SolveStatus::node_limit)
        throw GuardError("exact search stopped at the node limit of " + std::to_string(node_limit) + " without a verdict");

    WindowSpanResult out;
    out.nodes = solved.nodes;
    out.window_size = window.size();
    out.feasible = solved.status == SolveStatus::colorable;
    if (out.feasible) {
        WindowColoring coloring;
        coloring.l = l;
        for (std::size_t k = 0; k < window.size(); ++k)
            coloring.assignment.emplace(window[k], solved.colors[k] + 1);
        out.coloring = std::move(coloring);
    }
    return out;
}

} // namespace hexspan
