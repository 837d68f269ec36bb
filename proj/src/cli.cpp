#include "hexspan/cli.hpp"

#include "hexspan/errors.hpp"
#include "hexspan/io.hpp"
#include "hexspan/report_json.hpp"
#include "hexspan/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

namespace hexspan::cli {

namespace {

using nlohmann::json;

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool json_output = false;
};

std::string vertex_text(Vertex v) { return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")"; }

void emit_json(Context& ctx, const json& doc) { ctx.out << doc.dump(2) << '\n'; }

void write_output(const std::string& path, const std::string& content, std::ostream& fallback)
{
    if (path.empty() || path == "-") {
        fallback << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw RangeError("--out", "cannot open '" + path + "' for writing");
    file << content;
    if (!file)
        throw RangeError("--out", "write to '" + path + "' failed");
}

// ---------------------------------------------------------------- distance

int cmd_distance(Context& ctx, Vertex u, Vertex v)
{
    const int closed = distance_closed(u, v);
    const int bfs = distance_bfs(u, v);
    if (ctx.json_output) {
        emit_json(ctx, {{"schema_version", kSchemaVersion},
                        {"u", to_json(u)},
                        {"v", to_json(v)},
                        {"distance", closed},
                        {"bfs_distance", bfs},
                        {"agree", closed == bfs}});
    } else {
        ctx.out << "d" << vertex_text(u) << vertex_text(v) << " = " << closed << " (bfs " << bfs << ")\n";
    }
    return closed == bfs ? exit_ok : exit_verification_failed;
}

// ---------------------------------------------------------------- ring / clique / shell

int cmd_ring(Context& ctx, Vertex center, int k)
{
    const Ring ring = build_ring(center, k);
    if (ctx.json_output) {
        emit_json(ctx, to_json(ring));
        return exit_ok;
    }
    ctx.out << "ring k=" << k << " center " << vertex_text(center) << " size " << ring.size() << '\n';
    for (int n = 1; n <= static_cast<int>(ring.size()); ++n) {
        const Vertex v = ring.member(n);
        ctx.out << "  " << n << " " << vertex_text(v) << " group " << ring.group_of(n);
        if (ring.is_corner(v))
            ctx.out << " corner";
        ctx.out << '\n';
    }
    return exit_ok;
}

int cmd_clique(Context& ctx, Vertex center, int p)
{
    const DistanceClique clique = build_clique(center, p);
    if (ctx.json_output) {
        json members = json::array();
        for (Vertex v : clique.members)
            members.push_back(to_json(v));
        emit_json(ctx, {{"schema_version", kSchemaVersion},
                        {"center", to_json(center)},
                        {"p", p},
                        {"size", clique.members.size()},
                        {"expected_size", clique_size(p)},
                        {"members", members}});
        return exit_ok;
    }
    ctx.out << "clique p=" << p << " center " << vertex_text(center) << " size " << clique.members.size() << '\n';
    for (Vertex v : clique.members)
        ctx.out << "  " << vertex_text(v) << '\n';
    return exit_ok;
}

int cmd_shell(Context& ctx, Vertex center, int k, int h)
{
    const ShellSet shell = build_shell(center, k, h);
    if (ctx.json_output) {
        json members = json::array();
        for (std::size_t n = 0; n < shell.members.size(); ++n)
            members.push_back({{"n", shell.member_indices[n]}, {"vertex", to_json(shell.members[n])}});
        emit_json(ctx, {{"schema_version", kSchemaVersion},
                        {"center", to_json(center)},
                        {"k", k},
                        {"h", h},
                        {"size", shell.members.size()},
                        {"members", members}});
        return exit_ok;
    }
    ctx.out << "shell k=" << k << " h=" << h << " center " << vertex_text(center) << " size " << shell.members.size() << '\n';
    for (std::size_t n = 0; n < shell.members.size(); ++n)
        ctx.out << "  " << shell.member_indices[n] << " " << vertex_text(shell.members[n]) << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- span

int cmd_span(Context& ctx, int l)
{
    const SpanCertificate cert = span_even(l);
    if (ctx.json_output) {
        emit_json(ctx, to_json(cert));
    } else {
        ctx.out << "l=" << cert.l << " p=" << cert.p << " clique " << cert.clique_size << " + extra " << cert.extra
                << " = span " << cert.span << '\n';
        ctx.out << "formula value " << cert.formula_value << ", " << cert.parity_case << " with q=" << cert.q
                << " gives " << cert.parity_case_value << '\n';
    }
    return cert.consistent() ? exit_ok : exit_verification_failed;
}

// ---------------------------------------------------------------- check-observations

const std::vector<std::string> kObservationGroups = {"obs4", "obs5", "obs6", "obs7", "obs8", "thm1", "counts"};

void print_report(Context& ctx, const ObservationReport& report)
{
    ctx.out << to_string(report.id) << " p=" << report.p << ' ' << (report.pass() ? "PASS" : "FAIL") << " cases=" << report.cases;
    for (const auto& [key, value] : report.params)
        ctx.out << ' ' << key << '=' << value;
    ctx.out << " maxima{";
    bool first = true;
    for (const auto& [value, count] : report.maxima) {
        ctx.out << (first ? "" : ", ") << value << ':' << count;
        first = false;
    }
    ctx.out << "}\n";
    constexpr std::size_t shown = 5;
    for (std::size_t n = 0; n < std::min(shown, report.counterexamples.size()); ++n) {
        const auto& c = report.counterexamples[n];
        ctx.out << "  counterexample " << vertex_text(c.source) << " observed " << c.observed << ", bound " << c.bound
                << " [" << c.context << "]";
        if (!c.witness.empty()) {
            ctx.out << " witness";
            for (Vertex v : c.witness)
                ctx.out << ' ' << vertex_text(v);
        }
        ctx.out << '\n';
    }
    if (report.counterexamples.size() > shown)
        ctx.out << "  ... " << report.counterexamples.size() - shown << " more\n";
    for (const auto& note : report.notes)
        ctx.out << "  note: " << note << '\n';
}

int cmd_check_observations(Context& ctx, int p, std::vector<std::string> only)
{
    std::set<std::string> selected;
    for (auto& name : only) {
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        if (std::find(kObservationGroups.begin(), kObservationGroups.end(), name) == kObservationGroups.end())
            throw RangeError("--only", "unknown check '" + name + "'");
        selected.insert(name);
    }
    auto wanted = [&](const std::string& name) { return selected.empty() || selected.count(name) > 0; };

    std::vector<ObservationReport> reports;
    std::optional<CornerExclusion> exclusion;
    std::optional<ColorCountCertificate> counts;
    if (wanted("obs4"))
        reports.push_back(verify_observation_4(p));
    if (wanted("obs5"))
        reports.push_back(verify_corner_reuse(p));
    if (wanted("obs6"))
        reports.push_back(verify_noncorner_reuse(p));
    if (wanted("obs7") || wanted("obs8")) {
        ShellReuseReports shell = verify_shell_reuse_all(p);
        if (wanted("obs7"))
            reports.push_back(shell.shell);
        if (wanted("obs8") && shell.rest)
            reports.push_back(*shell.rest);
    }
    if (wanted("thm1"))
        exclusion = verify_corner_exclusion(p);
    if (wanted("counts"))
        counts = theorem_color_count(p);

    bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
    pass = pass && (!exclusion || exclusion->report.pass()) && (!counts || counts->pass());

    if (ctx.json_output) {
        json list = json::array();
        for (const auto& r : reports)
            list.push_back(to_json(r));
        json doc = {{"schema_version", kSchemaVersion}, {"p", p}, {"verdict", pass ? "pass" : "fail"}, {"reports", list}};
        if (exclusion)
            doc["corner_exclusion"] = to_json(*exclusion);
        if (counts)
            doc["color_count"] = to_json(*counts);
        emit_json(ctx, doc);
    } else {
        for (const auto& r : reports)
            print_report(ctx, r);
        if (exclusion) {
            print_report(ctx, exclusion->report);
            for (int c = 0; c < 6; ++c) {
                ctx.out << "  c" << c + 1 << " double reuse:";
                for (auto [a, b] : exclusion->double_reuse[c])
                    ctx.out << " {" << a << ',' << b << '}';
                ctx.out << '\n';
            }
        }
        if (counts) {
            ctx.out << "colour count p=" << p << ": clique " << counts->clique_size << " + new " << counts->new_colors
                    << " = " << counts->final_count << '\n';
            for (const auto* r : {&counts->thm1, &counts->thm2, &counts->thm3})
                print_report(ctx, *r);
        }
        ctx.out << "overall " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? exit_ok : exit_verification_failed;
}

// ---------------------------------------------------------------- search-lattice

int cmd_search_lattice(Context& ctx, int l, int max_index, std::optional<int> colors, bool fallback, int max_multiplier,
                       const std::string& out_path)
{
    std::optional<LatticeColoring> coloring;
    std::vector<std::string> notes;
    std::optional<int> best_single;
    std::optional<int> target;
    if (fallback || colors) {
        target = colors ? *colors : static_cast<int>(span_even(l).span);
        PeriodicConstruction built = construct_periodic(l, *target, max_index, max_multiplier);
        coloring = built.coloring;
        notes = built.notes;
        best_single = built.best_single_coset;
    } else {
        coloring = search_lattice(l, max_index);
        if (coloring)
            best_single = coloring->lattice.index();
    }

    std::optional<Verdict> verdict;
    if (coloring) {
        verdict = verify_lattice(*coloring);
        std::ostringstream file;
        write_coloring(file, *coloring);
        if (!out_path.empty())
            write_output(out_path, file.str(), ctx.out);
    }
    const bool ok = coloring && verdict->ok();

    if (ctx.json_output) {
        json doc = {{"schema_version", kSchemaVersion}, {"l", l}, {"max_index", max_index}, {"found", coloring.has_value()}};
        if (target)
            doc["target"] = *target;
        doc["best_single_coset_index"] = best_single ? json(*best_single) : json(nullptr);
        if (coloring) {
            doc["coloring"] = to_json(*coloring);
            doc["verification"] = to_json(*verdict);
        }
        doc["notes"] = notes;
        emit_json(ctx, doc);
    } else {
        if (coloring) {
            const Translation t1 = coloring->lattice.t1();
            const Translation t2 = coloring->lattice.t2();
            ctx.out << "l=" << l << ": " << coloring->color_count() << " colours, " << to_string(coloring->mode())
                    << ", index " << coloring->lattice.index() << ", basis (" << t1.di << ',' << t1.dj << ") (" << t2.di
                    << ',' << t2.dj << "), verification " << (verdict->ok() ? "PASS" : "FAIL") << '\n';
        } else {
            ctx.out << "l=" << l << ": no periodic colouring found\n";
        }
        for (const auto& note : notes)
            ctx.out << "note: " << note << '\n';
        if (coloring && out_path.empty()) {
            write_coloring(ctx.out, *coloring);
        }
    }
    return ok ? exit_ok : exit_verification_failed;
}

// ---------------------------------------------------------------- verify-coloring / render

int cmd_verify_coloring(Context& ctx, const std::string& path)
{
    const ColoringFile file = read_coloring_file(path);
    const Verdict verdict = std::visit(
        [](const auto& c) {
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, LatticeColoring>)
                return verify_lattice(c);
            else
                return verify_window(c);
        },
        file);
    const int colors = std::visit([](const auto& c) { return c.color_count(); }, file);
    if (ctx.json_output) {
        json doc = to_json(verdict);
        doc["file"] = path;
        doc["colors"] = colors;
        doc["kind"] = std::holds_alternative<LatticeColoring>(file) ? "lattice" : "window";
        emit_json(ctx, doc);
    } else {
        ctx.out << path << ": " << colors << " colours, " << (verdict.ok() ? "PASS" : "FAIL") << '\n';
        for (const auto& problem : verdict.problems)
            ctx.out << "  problem: " << problem << '\n';
        for (const auto& v : verdict.violations)
            ctx.out << "  violation " << vertex_text(v.u) << ' ' << vertex_text(v.v) << " distance " << v.distance << '\n';
    }
    return verdict.ok() ? exit_ok : exit_verification_failed;
}

int cmd_render(Context& ctx, const std::string& path, const std::string& out_path)
{
    const ColoringFile file = read_coloring_file(path);
    const std::string svg = render_svg(file);
    write_output(out_path, svg, ctx.out);
    if (!out_path.empty() && out_path != "-") {
        if (ctx.json_output)
            emit_json(ctx, {{"schema_version", kSchemaVersion}, {"input", path}, {"output", out_path}, {"bytes", svg.size()}});
        else
            ctx.out << "wrote " << out_path << " (" << svg.size() << " bytes)\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------- exact-window / export-dimacs

int cmd_exact_window(Context& ctx, int l, int radius, int budget, int guard, long long node_limit)
{
    const WindowSpanResult result = exact_window_span(l, radius, budget, guard, node_limit);
    if (ctx.json_output) {
        json doc = {{"schema_version", kSchemaVersion},
                    {"l", l},
                    {"radius", radius},
                    {"budget", budget},
                    {"window_size", result.window_size},
                    {"feasible", result.feasible},
                    {"nodes", result.nodes}};
        if (result.coloring) {
            json cells = json::array();
            for (const auto& [v, c] : result.coloring->assignment)
                cells.push_back({v.i, v.j, c});
            doc["cells"] = cells;
        }
        emit_json(ctx, doc);
    } else {
        ctx.out << "l=" << l << " radius " << radius << " (" << result.window_size << " vertices), budget " << budget << ": "
                << (result.feasible ? "colourable" : "not colourable") << " after " << result.nodes << " nodes\n";
        if (result.coloring)
            write_coloring(ctx.out, *result.coloring);
    }
    return exit_ok;
}

int cmd_export_dimacs(Context& ctx, int l, int radius, int guard, const std::string& out_path)
{
    std::ostringstream graph;
    const DimacsSummary summary = write_dimacs(graph, l, radius, guard);
    write_output(out_path, graph.str(), ctx.out);
    if (!out_path.empty() && out_path != "-") {
        if (ctx.json_output)
            emit_json(ctx, {{"schema_version", kSchemaVersion},
                            {"l", l},
                            {"radius", radius},
                            {"vertices", summary.vertices},
                            {"edges", summary.edges},
                            {"output", out_path}});
        else
            ctx.out << "wrote " << out_path << ": " << summary.vertices << " vertices, " << summary.edges << " edges\n";
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Context ctx{out, err};
    CLI::App app{"Distance colourings of the hexagonal grid", "hexspan"};
    app.require_subcommand(1);
    app.add_flag("--json", ctx.json_output, "machine-readable output");
    app.fallthrough();

    std::function<int()> action;
    const auto nonneg = CLI::Range(0, 1'000'000);
    const auto positive = CLI::Range(1, 1'000'000);

    std::vector<int> center{0, 0};
    auto add_center = [&](CLI::App* sub) {
        sub->add_option("--center", center, "center vertex i j")->expected(2)->allow_extra_args(false);
    };

    auto* distance = app.add_subcommand("distance", "distance between two vertices");
    std::vector<int> coords;
    distance->add_option("coords", coords, "i1 j1 i2 j2")->expected(4)->required();
    distance->callback([&] { action = [&] { return cmd_distance(ctx, {coords[0], coords[1]}, {coords[2], coords[3]}); }; });

    auto* ring = app.add_subcommand("ring", "vertices at distance exactly k");
    int ring_k = 0;
    ring->add_option("k", ring_k, "ring radius")->required()->check(positive);
    add_center(ring);
    ring->callback([&] { action = [&] { return cmd_ring(ctx, {center[0], center[1]}, ring_k); }; });

    auto* clique = app.add_subcommand("clique", "ball of radius p");
    int clique_p = 0;
    clique->add_option("p", clique_p, "ball radius")->required()->check(CLI::Range(1, 2000));
    add_center(clique);
    clique->callback([&] { action = [&] { return cmd_clique(ctx, {center[0], center[1]}, clique_p); }; });

    auto* shell = app.add_subcommand("shell", "non-corner ring vertices at distance 2h from a corner");
    int shell_k = 0;
    int shell_h = 0;
    shell->add_option("k", shell_k, "ring radius, at least 5")->required()->check(CLI::Range(5, 100000));
    shell->add_option("half", shell_h, "h: half the distance to the nearest corner")->required()->check(positive);
    add_center(shell);
    shell->callback([&] { action = [&] { return cmd_shell(ctx, {center[0], center[1]}, shell_k, shell_h); }; });

    auto* span = app.add_subcommand("span", "closed-form span for even l >= 8");
    int span_l = 0;
    span->add_option("l", span_l, "distance parameter")->required();
    span->callback([&] { action = [&] { return cmd_span(ctx, span_l); }; });

    auto* check = app.add_subcommand("check-observations", "exhaustive reuse checks for one p");
    int check_p = 0;
    std::vector<std::string> only;
    check->add_option("--p", check_p, "ring parameter, at least 4")->required()->check(CLI::Range(4, 40));
    check->add_option("--only", only, "subset of obs4 obs5 obs6 obs7 obs8 thm1 counts")->delimiter(',');
    check->callback([&] { action = [&] { return cmd_check_observations(ctx, check_p, only); }; });

    auto* search = app.add_subcommand("search-lattice", "periodic colouring search");
    int search_l = 0;
    int max_index = 0;
    int max_multiplier = 3;
    std::optional<int> target_colors;
    bool fallback = false;
    std::string search_out;
    search->add_option("l", search_l, "distance parameter")->required()->check(CLI::Range(1, 64));
    search->add_option("--max-index", max_index, "largest single-coset index tried")->required()->check(CLI::Range(2, 4096));
    search->add_option("--colors", target_colors, "colour target for the multi-domain fallback")->check(CLI::Range(1, 4096));
    search->add_flag("--fallback", fallback, "fall back to multi-domain mode at the closed-form span");
    search->add_option("--max-multiplier", max_multiplier, "largest domain size per colour")->check(CLI::Range(2, 8));
    search->add_option("--out", search_out, "write the colouring file here");
    search->callback([&] {
        action = [&] { return cmd_search_lattice(ctx, search_l, max_index, target_colors, fallback, max_multiplier, search_out); };
    });

    auto* verify = app.add_subcommand("verify-coloring", "check a colouring file");
    std::string verify_path;
    verify->add_option("file", verify_path, "colouring file")->required();
    verify->callback([&] { action = [&] { return cmd_verify_coloring(ctx, verify_path); }; });

    auto* window = app.add_subcommand("exact-window", "exact colourability of a finite window");
    int window_l = 0;
    int radius = 0;
    int budget = 0;
    int guard = 200;
    long long node_limit = 50'000'000;
    window->add_option("l", window_l, "distance parameter")->required()->check(positive);
    window->add_option("--radius", radius, "window radius")->required()->check(nonneg);
    window->add_option("--budget", budget, "number of colours")->required()->check(positive);
    window->add_option("--guard", guard, "largest window size searched")->check(positive);
    window->add_option("--node-limit", node_limit, "search node limit")->check(positive);
    window->callback([&] { action = [&] { return cmd_exact_window(ctx, window_l, radius, budget, guard, node_limit); }; });

    auto* dimacs = app.add_subcommand("export-dimacs", "power graph of a window in DIMACS format");
    int dimacs_l = 0;
    int dimacs_radius = 0;
    int dimacs_guard = 200;
    std::string dimacs_out;
    dimacs->add_option("l", dimacs_l, "distance parameter")->required()->check(positive);
    dimacs->add_option("--radius", dimacs_radius, "window radius")->required()->check(nonneg);
    dimacs->add_option("--guard", dimacs_guard, "largest window size exported")->check(positive);
    dimacs->add_option("--out", dimacs_out, "output path (stdout when omitted)");
    dimacs->callback([&] { action = [&] { return cmd_export_dimacs(ctx, dimacs_l, dimacs_radius, dimacs_guard, dimacs_out); }; });

    auto* render = app.add_subcommand("render", "SVG picture of a colouring file");
    std::string render_path;
    std::string render_out;
    render->add_option("file", render_path, "colouring file")->required();
    render->add_option("--out", render_out, "output path (stdout when omitted)");
    render->callback([&] { action = [&] { return cmd_render(ctx, render_path, render_out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        return action();
    } catch (const GuardError& e) {
        err << "refused: " << e.what() << '\n';
        return exit_guard;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace hexspan::cli
