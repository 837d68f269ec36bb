#include "hexspan/reuse.hpp"

#include "hexspan/errors.hpp"
#include "hexspan/far_subset.hpp"
#include "hexspan/shell.hpp"

#include <algorithm>
#include <sstream>

namespace hexspan {

namespace {

constexpr Vertex kCenter{0, 0};

std::string ring_label(int k) { return "F_{x," + std::to_string(k) + "}"; }

std::string range_label(int first, int last)
{
    if (first > last)
        return "none";
    if (first == last)
        return std::to_string(first);
    return std::to_string(first) + ".." + std::to_string(last);
}

std::vector<int> resolve_q(int p, std::span<const int> q_values, int q_max)
{
    std::vector<int> qs;
    if (q_values.empty()) {
        for (int q = 0; q <= q_max; ++q)
            qs.push_back(q);
        return qs;
    }
    for (int q : q_values) {
        if (q < 0 || q > q_max)
            throw RangeError("q", "must lie in [0, " + std::to_string(q_max) + "] for p=" + std::to_string(p) +
                                      ", got " + std::to_string(q));
        qs.push_back(q);
    }
    return qs;
}

std::string qs_label(const std::vector<int>& qs)
{
    std::ostringstream out;
    for (std::size_t idx = 0; idx < qs.size(); ++idx)
        out << (idx ? "," : "") << qs[idx];
    return out.str();
}

void record(ObservationReport& report, const SpreadBound& spread, int bound, const std::string& context)
{
    ++report.cases;
    ++report.maxima[spread.max_spread];
    if (spread.max_spread > bound)
        report.counterexamples.push_back({spread.source, spread.max_spread, bound, context, spread.witness});
}

struct SpreadJob {
    Vertex source;
    const std::vector<Vertex>* target;
    std::string label;
};

std::vector<SpreadBound> run_jobs(int p, const std::vector<SpreadJob>& jobs, Execution exec)
{
    return indexed_map<SpreadBound>(jobs.size(), exec, [&](std::size_t idx) {
        return max_spread(jobs[idx].source, p, *jobs[idx].target, jobs[idx].label);
    });
}

void check_size(ObservationReport& report, const std::string& what, long long actual, long long expected)
{
    ++report.cases;
    if (actual != expected)
        report.counterexamples.push_back({kCenter, static_cast<int>(actual), static_cast<int>(expected),
                                          what + " has " + std::to_string(actual) + " vertices, the count uses " +
                                              std::to_string(expected),
                                          {}});
}

long long shell_size(int k, int h)
{
    return static_cast<long long>(shell_by_definition(build_ring(kCenter, k), h).members.size());
}

std::string shell_label(int k, int h)
{
    return "S_{x," + std::to_string(k) + "}^{" + std::to_string(2 * h) + "}";
}

} // namespace

std::string to_string(ObservationId id)
{
    switch (id) {
    case ObservationId::obs4: return "Obs4";
    case ObservationId::obs5: return "Obs5";
    case ObservationId::obs6: return "Obs6";
    case ObservationId::obs7: return "Obs7";
    case ObservationId::obs8: return "Obs8";
    case ObservationId::thm1_exclusion: return "Thm1-exclusion";
    case ObservationId::thm1_count: return "Thm1-count";
    case ObservationId::thm2_count: return "Thm2-count";
    case ObservationId::thm3_count: return "Thm3-count";
    }
    return "unknown";
}

SpreadBound max_spread(Vertex source, int p, std::span<const Vertex> target, std::string target_label)
{
    const ReuseSet reuse = reuse_set(source, p, target);
    SpreadBound out{source, p, std::move(target_label), reuse.members.size(), 0, {}};
    for (std::size_t idx : max_far_subset(reuse.members, 2 * p + 1))
        out.witness.push_back(reuse.members[idx]);
    out.max_spread = static_cast<int>(out.witness.size());
    return out;
}

SpreadBound max_spread_exhaustive(Vertex source, int p, std::span<const Vertex> target, std::string target_label)
{
    std::vector<Vertex> reuse;
    for (Vertex u : target)
        if (distance_bfs(u, source) >= 2 * p + 1)
            reuse.push_back(u);
    SpreadBound out{source, p, std::move(target_label), reuse.size(), 0, {}};
    for (std::size_t idx : max_far_subset_exhaustive(reuse, 2 * p + 1))
        out.witness.push_back(reuse[idx]);
    out.max_spread = static_cast<int>(out.witness.size());
    return out;
}

ObservationReport verify_observation_4(int p, Execution exec)
{
    if (p < 2)
        throw RangeError("p", "must be >= 2, got " + std::to_string(p));
    ObservationReport report;
    report.id = ObservationId::obs4;
    report.p = p;
    report.params = {{"window_radius", std::to_string(2 * p)}};

    const DistanceField from_center(kCenter, 2 * p);
    const std::vector<Vertex> inner = ball(kCenter, p);
    std::vector<Vertex> outer;
    for (Vertex v : from_center.reached())
        if (from_center.at(v) > p)
            outer.push_back(v);

    struct Partial {
        long long cases = 0;
        int max_distance = 0;
        std::vector<Counterexample> bad;
    };
    const auto partials = indexed_map<Partial>(inner.size(), exec, [&](std::size_t idx) {
        Partial part;
        const Vertex v1 = inner[idx];
        const int d1 = from_center.at(v1);
        const DistanceField from_v1(v1, 2 * p);
        for (Vertex v2 : outer) {
            const int d2 = from_center.at(v2);
            if (d1 + d2 >= 2 * p + 1)
                continue;
            ++part.cases;
            const int by_search = from_v1.at(v2);  // -1 means farther than 2p
            const int by_formula = distance_closed(v1, v2);
            const int observed = by_search < 0 ? 2 * p + 1 : by_search;
            part.max_distance = std::max(part.max_distance, observed);
            if (by_search < 0 || by_formula != by_search)
                part.bad.push_back({v1, std::max(observed, by_formula), 2 * p,
                                    "pair with " + std::to_string(d1) + "+" + std::to_string(d2) + " < 2p+1",
                                    {v2}});
        }
        return part;
    });
    for (const auto& part : partials) {
        report.cases += part.cases;
        ++report.maxima[part.max_distance];
        report.counterexamples.insert(report.counterexamples.end(), part.bad.begin(), part.bad.end());
    }
    report.notes.push_back("histogram keys are the largest d(v1,v2) seen per v1 in D_x^{2p}");
    return report;
}

ObservationReport verify_corner_reuse(int p, std::span<const int> q_values, Execution exec)
{
    if (p < 2)
        throw RangeError("p", "must be >= 2, got " + std::to_string(p));
    const auto qs = resolve_q(p, q_values, p - 2);
    ObservationReport report;
    report.id = ObservationId::obs5;
    report.p = p;
    report.params = {{"q", qs_label(qs)}, {"bound", "2"}};

    std::vector<std::vector<Vertex>> targets;
    targets.reserve(qs.size());
    std::vector<SpreadJob> jobs;
    for (int q : qs)
        targets.push_back(build_ring(kCenter, p + q + 1).members());
    for (std::size_t t = 0; t < qs.size(); ++t) {
        const int q = qs[t];
        const Ring ring = build_ring(kCenter, p - q);
        for (int c = 1; c <= 6; ++c)
            jobs.push_back({ring.corner(c), &targets[t],
                            "corner c" + std::to_string(c) + " of " + ring_label(p - q) + " into " + ring_label(p + q + 1)});
    }
    const auto spreads = run_jobs(p, jobs, exec);
    for (std::size_t idx = 0; idx < jobs.size(); ++idx)
        record(report, spreads[idx], 2, jobs[idx].label);
    return report;
}

ObservationReport verify_noncorner_reuse(int p, std::span<const int> q_values, Execution exec)
{
    if (p < 3)
        throw RangeError("p", "must be >= 3, got " + std::to_string(p));
    const auto qs = resolve_q(p, q_values, p - 3);
    ObservationReport report;
    report.id = ObservationId::obs6;
    report.p = p;
    report.params = {{"q", qs_label(qs)}, {"bound", "1"}};

    std::vector<std::vector<Vertex>> targets;
    targets.reserve(qs.size());
    std::vector<SpreadJob> jobs;
    for (int q : qs)
        targets.push_back(build_ring(kCenter, p + q + 1).members());
    for (std::size_t t = 0; t < qs.size(); ++t) {
        const int q = qs[t];
        const Ring ring = build_ring(kCenter, p - q);
        for (int n = 1; n <= static_cast<int>(ring.size()); ++n) {
            const Vertex v = ring.member(n);
            if (ring.is_corner(v))
                continue;
            jobs.push_back({v, &targets[t],
                            "v^" + std::to_string(n) + " of " + ring_label(p - q) + " into " + ring_label(p + q + 1)});
        }
    }
    const auto spreads = run_jobs(p, jobs, exec);
    for (std::size_t idx = 0; idx < jobs.size(); ++idx)
        record(report, spreads[idx], 1, jobs[idx].label);
    return report;
}

namespace {

void check_shell_range(int p, int q, int r)
{
    if (q < 0 || q > p - 4)
        throw RangeError("q", "must lie in [0, " + std::to_string(p - 4) + "] for p=" + std::to_string(p) + ", got " +
                                  std::to_string(q));
    if (p - q < 5)
        throw RangeError("q", "p-q = " + std::to_string(p - q) + " but shell sets need a ring with k >= 5");
    const int r_max = (p - q) / 2 - 1;
    if (r < 1 || r > r_max)
        throw RangeError("r", "must lie in [1, " + std::to_string(r_max) + "] for p-q=" + std::to_string(p - q) +
                                  ", got " + std::to_string(r));
}

struct ShellCase {
    int q;
    int r;
    std::vector<Vertex> target;
};

ShellReuseReports run_shell_cases(int p, std::vector<ShellCase>& cases, Execution exec)
{
    ShellReuseReports out;
    out.shell.id = ObservationId::obs7;
    out.shell.p = p;
    ObservationReport rest;
    rest.id = ObservationId::obs8;
    rest.p = p;
    bool any_rest = false;

    std::vector<SpreadJob> jobs;
    std::vector<bool> in_shell;
    std::vector<bool> rest_applies;
    for (auto& sc : cases) {
        const int k = p - sc.q;
        const Ring ring = build_ring(kCenter, k);
        const ShellSet shell = build_shell(ring, sc.r);
        const std::string where = "into F_{x," + std::to_string(p + sc.q + 1) + ".." + std::to_string(p + sc.q + 2 * sc.r + 1) +
                                  "} (q=" + std::to_string(sc.q) + ", r=" + std::to_string(sc.r) + ")";
        for (int n = 1; n <= static_cast<int>(ring.size()); ++n) {
            const Vertex v = ring.member(n);
            if (ring.is_corner(v))
                continue;
            const bool member = std::find(shell.members.begin(), shell.members.end(), v) != shell.members.end();
            jobs.push_back({v, &sc.target, "v^" + std::to_string(n) + " of " + ring_label(k) + " " + where});
            in_shell.push_back(member);
            rest_applies.push_back(sc.q <= p - 5);
        }
    }
    const auto spreads = run_jobs(p, jobs, exec);
    for (std::size_t idx = 0; idx < jobs.size(); ++idx) {
        if (in_shell[idx]) {
            record(out.shell, spreads[idx], 2, jobs[idx].label);
        } else if (rest_applies[idx]) {
            record(rest, spreads[idx], 1, jobs[idx].label);
            any_rest = true;
        }
    }
    if (any_rest)
        out.rest = std::move(rest);
    return out;
}

} // namespace

ShellReuseReports verify_shell_reuse(int p, int q, int r, Execution exec)
{
    check_shell_range(p, q, r);
    std::vector<ShellCase> cases{{q, r, ring_union(kCenter, p + q + 1, p + q + 2 * r + 1)}};
    auto out = run_shell_cases(p, cases, exec);
    out.shell.params = {{"q", std::to_string(q)}, {"r", std::to_string(r)}, {"bound", "2"}};
    if (out.rest)
        out.rest->params = {{"q", std::to_string(q)}, {"r", std::to_string(r)}, {"bound", "1"}};
    return out;
}

ShellReuseReports verify_shell_reuse_all(int p, Execution exec)
{
    if (p < 4)
        throw RangeError("p", "must be >= 4, got " + std::to_string(p));
    std::vector<ShellCase> cases;
    std::string pairs;
    for (int q = 0; q <= p - 4; ++q) {
        if (p - q < 5)
            continue;
        for (int r = 1; r <= (p - q) / 2 - 1; ++r) {
            cases.push_back({q, r, ring_union(kCenter, p + q + 1, p + q + 2 * r + 1)});
            pairs += (pairs.empty() ? "" : " ") + std::string("(") + std::to_string(q) + "," + std::to_string(r) + ")";
        }
    }
    auto out = run_shell_cases(p, cases, exec);
    out.shell.params = {{"(q,r)", pairs.empty() ? "none" : pairs}, {"bound", "2"}};
    if (p - 4 >= 0)
        out.shell.notes.push_back("q=" + std::to_string(p - 4) + " skipped: p-q = 4 is below the k >= 5 shell domain");
    if (cases.empty())
        out.shell.notes.push_back("no (q,r) in range for this p; nothing to check");
    if (out.rest)
        out.rest->params = {{"(q,r)", pairs}, {"q_max", std::to_string(p - 5)}, {"bound", "1"}};
    return out;
}

CornerExclusion verify_corner_exclusion(int p)
{
    if (p < 2)
        throw RangeError("p", "must be >= 2, got " + std::to_string(p));
    CornerExclusion out;
    out.p = p;
    out.report.id = ObservationId::thm1_exclusion;
    out.report.p = p;
    out.report.params = {{"source", ring_label(p)}, {"target", ring_label(p + 1)}};

    const Ring inner = build_ring(kCenter, p);
    const Ring outer = build_ring(kCenter, p + 1);
    for (int c = 1; c <= 6; ++c) {
        const ReuseSet reuse = reuse_set(inner.corner(c), p, outer.members());
        const auto& m = reuse.members;
        for (std::size_t a = 0; a < m.size(); ++a)
            for (std::size_t b = a + 1; b < m.size(); ++b)
                if (distance_closed(m[a], m[b]) >= 2 * p + 1)
                    out.double_reuse[static_cast<std::size_t>(c - 1)].emplace_back(*outer.index_of(m[a]), *outer.index_of(m[b]));
        ++out.report.maxima[static_cast<int>(out.double_reuse[static_cast<std::size_t>(c - 1)].size())];
    }

    auto disjoint = [](std::pair<int, int> x, std::pair<int, int> y) {
        return x.first != y.first && x.first != y.second && x.second != y.first && x.second != y.second;
    };
    for (int a = 0; a < 6; ++a) {
        for (int b = a + 1; b < 6; ++b) {
            bool ok = false;
            for (auto x : out.double_reuse[static_cast<std::size_t>(a)])
                for (auto y : out.double_reuse[static_cast<std::size_t>(b)])
                    ok = ok || disjoint(x, y);
            out.compatible[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ok;
            out.compatible[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = ok;
            ++out.report.cases;
            if (ok && (a % 2) == (b % 2))
                out.report.counterexamples.push_back({inner.corner(a + 1), 2, 1,
                                                      "corners c" + std::to_string(a + 1) + " and c" + std::to_string(b + 1) +
                                                          " can both be reused twice in " + ring_label(p + 1),
                                                      {inner.corner(b + 1)}});
        }
    }

    auto name = [&](int n) {
        for (int c = 1; c <= 6; ++c)
            if (outer.corner_index(c) == n)
                return "c" + std::to_string(c);
        return "v^" + std::to_string(n);
    };
    for (int c = 1; c <= 6; ++c) {
        std::string line = "c" + std::to_string(c) + " of " + ring_label(p) + " doubly reusable at";
        const auto& pairs = out.double_reuse[static_cast<std::size_t>(c - 1)];
        if (pairs.empty())
            line += " nothing";
        for (auto [x, y] : pairs)
            line += " {" + name(x) + "," + name(y) + "}";
        out.report.notes.push_back(line + " of " + ring_label(p + 1));
    }
    return out;
}

ColorCountCertificate theorem_color_count(int p)
{
    if (p < 4)
        throw RangeError("p", "must be >= 4, got " + std::to_string(p));
    ColorCountCertificate cert;
    cert.p = p;
    cert.clique_size = clique_size(p);
    cert.new_colors = p / 2;
    cert.final_count = cert.clique_size + cert.new_colors;

    auto ring_size = [](int k) { return static_cast<long long>(build_ring(kCenter, k).size()); };
    auto noncorner_size = [](int k) { return static_cast<long long>(build_ring(kCenter, k).non_corners().size()); };
    const long long P = p;

    // One new colour in F_{x,p+1}.
    auto& t1 = cert.thm1;
    t1.id = ObservationId::thm1_count;
    t1.p = p;
    check_size(t1, ring_label(p), ring_size(p), 3 * P);
    check_size(t1, "F^nc_{x," + std::to_string(p) + "}", noncorner_size(p), 3 * P - 6);
    check_size(t1, ring_label(p + 1), ring_size(p + 1), 3 * P + 3);
    {
        const long long slots = (3 * P - 6) * 1 + 2 * 2 + 4 * 1;
        const long long deficit = ring_size(p + 1) - slots;
        t1.params = {{"slots", std::to_string(slots)}, {"ring", std::to_string(ring_size(p + 1))},
                     {"deficit", std::to_string(deficit)}};
        ++t1.cases;
        ++t1.maxima[static_cast<int>(deficit)];
        if (deficit < 1)
            t1.counterexamples.push_back({kCenter, static_cast<int>(deficit), 1, "no uncoloured vertex left in F_{x,p+1}", {}});
    }

    // A second new colour in F_{x,p+2} u F_{x,p+3}.
    auto& t2 = cert.thm2;
    t2.id = ObservationId::thm2_count;
    t2.p = p;
    const long long pair_size = ring_size(p + 2) + ring_size(p + 3);
    check_size(t2, "F_{x,p+2} u F_{x,p+3}", pair_size, 6 * P + 15);
    check_size(t2, "F^nc_{x,p-1} u F^nc_{x,p-2}", noncorner_size(p - 1) + noncorner_size(p - 2), 6 * P - 21);
    check_size(t2, shell_label(p, 1), shell_size(p, 1), 12);
    {
        const long long colourable = (6 * P - 21) + (6 * 2 + 12 * 1 - 6) + 6 * 2;
        const long long uncoloured = pair_size - colourable;
        const long long after_spare_corners = uncoloured - 2;
        const long long after_first_new = after_spare_corners - 2;
        t2.params = {{"colourable", std::to_string(colourable)}, {"uncoloured", std::to_string(uncoloured)},
                     {"left_for_second_colour", std::to_string(after_first_new)}};
        ++t2.cases;
        ++t2.maxima[static_cast<int>(after_first_new)];
        if (after_first_new < 1)
            t2.counterexamples.push_back({kCenter, static_cast<int>(after_first_new), 1, "no vertex left for a second colour", {}});
    }

    // The r-th step, r = 1 .. floor(p/2) - 1.
    auto& t3 = cert.thm3;
    t3.id = ObservationId::thm3_count;
    t3.p = p;
    t3.params = {{"r", range_label(1, p / 2 - 1)}, {"final_count", std::to_string(cert.final_count)}};
    for (int r = 1; r <= p / 2 - 1; ++r) {
        BudgetRow row;
        row.r = r;
        const long long R = r;
        const std::string at = " (r=" + std::to_string(r) + ")";

        row.noncorner_size = noncorner_size(p - 2 * r);
        check_size(t3, "F^nc_{x," + std::to_string(p - 2 * r) + "}" + at, row.noncorner_size, 3 * (P - 2 * R) - 6);
        for (int k = 0; k <= r - 1; ++k) {
            const long long s = shell_size(p - 2 * k, r - k);
            row.shell_sizes.emplace_back(shell_label(p - 2 * k, r - k), s);
            check_size(t3, shell_label(p - 2 * k, r - k) + at, s, 12);
        }
        row.slots = (3 * (P - 2 * R) - 6) * 1 + 12 * R + 6;
        row.ring_size = ring_size(p + 2 * r + 1);
        check_size(t3, ring_label(p + 2 * r + 1) + at, row.ring_size, 3 * P + 6 * R + 3);
        row.deficit = row.ring_size - row.slots;
        ++t3.cases;
        if (row.slots != 3 * P + 6 * R || row.deficit != 3)
            t3.counterexamples.push_back({kCenter, static_cast<int>(row.deficit), 3, "single-ring budget" + at, {}});

        for (int k = 0; k <= r - 2; ++k) {
            const long long s = shell_size(p - 1 - 2 * k, r - 1 - k);
            row.shell_sizes.emplace_back(shell_label(p - 1 - 2 * k, r - 1 - k), s);
            check_size(t3, shell_label(p - 1 - 2 * k, r - 1 - k) + at, s, 12);
        }
        check_size(t3, "F^nc_{x," + std::to_string(p - 2 * r + 1) + "}" + at, noncorner_size(p - 2 * r + 1),
                   3 * (P - 2 * R + 1) - 6);
        const long long second_slots = (3 * (P - 2 * R + 1) - 6) * 1 + 6 * 2 + 12 * (R - 1);
        row.paired_slots = row.slots + second_slots;
        row.paired_size = ring_size(p + 2 * r) + row.ring_size;
        check_size(t3, "F_{x,p+2r} u F_{x,p+2r+1}" + at, row.paired_size, 6 * P + 12 * R + 3);
        row.paired_deficit = row.paired_size - row.paired_slots;
        ++t3.cases;
        ++t3.maxima[static_cast<int>(row.paired_deficit)];
        if (second_slots != 3 * P + 6 * R - 3 || row.paired_deficit != 6)
            t3.counterexamples.push_back({kCenter, static_cast<int>(row.paired_deficit), 6, "paired-ring budget" + at, {}});
        cert.rows.push_back(std::move(row));
    }
    return cert;
}

} // namespace hexspan
