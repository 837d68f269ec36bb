#include "hexspan/report_json.hpp"

namespace hexspan {

using nlohmann::json;

json to_json(Vertex v) { return json::array({v.i, v.j}); }

json to_json(const SpanCertificate& cert)
{
    return {{"schema_version", kSchemaVersion},
            {"l", cert.l},
            {"p", cert.p},
            {"clique_size", cert.clique_size},
            {"extra", cert.extra},
            {"span", cert.span},
            {"formula_value", cert.formula_value},
            {"parity_case", cert.parity_case},
            {"q", cert.q},
            {"parity_case_value", cert.parity_case_value},
            {"consistent", cert.consistent()}};
}

json to_json(const ObservationReport& report)
{
    json params = json::object();
    for (const auto& [key, value] : report.params)
        params[key] = value;
    json histogram = json::object();
    for (const auto& [value, count] : report.maxima)
        histogram[std::to_string(value)] = count;
    json counterexamples = json::array();
    for (const auto& c : report.counterexamples) {
        json witness = json::array();
        for (Vertex v : c.witness)
            witness.push_back(to_json(v));
        counterexamples.push_back(
            {{"source", to_json(c.source)}, {"observed", c.observed}, {"bound", c.bound}, {"context", c.context}, {"witness", witness}});
    }
    return {{"schema_version", kSchemaVersion},
            {"id", to_string(report.id)},
            {"p", report.p},
            {"params", params},
            {"verdict", report.pass() ? "pass" : "fail"},
            {"cases", report.cases},
            {"maxima_histogram", histogram},
            {"counterexamples", counterexamples},
            {"notes", report.notes}};
}

json to_json(const SpreadBound& spread)
{
    json witness = json::array();
    for (Vertex v : spread.witness)
        witness.push_back(to_json(v));
    return {{"schema_version", kSchemaVersion},
            {"source", to_json(spread.source)},
            {"p", spread.p},
            {"target", spread.target},
            {"reuse_size", spread.reuse_size},
            {"max_spread", spread.max_spread},
            {"witness", witness}};
}

json to_json(const CornerExclusion& exclusion)
{
    json out = to_json(exclusion.report);
    json pairs = json::array();
    for (const auto& list : exclusion.double_reuse) {
        json row = json::array();
        for (auto [a, b] : list)
            row.push_back(json::array({a, b}));
        pairs.push_back(row);
    }
    json compat = json::array();
    for (const auto& row : exclusion.compatible)
        compat.push_back(json(row));
    out["double_reuse_member_indices"] = pairs;
    out["compatible"] = compat;
    return out;
}

json to_json(const ColorCountCertificate& cert)
{
    json rows = json::array();
    for (const auto& row : cert.rows) {
        json shells = json::object();
        for (const auto& [label, size] : row.shell_sizes)
            shells[label] = size;
        rows.push_back({{"r", row.r},
                        {"slots", row.slots},
                        {"ring_size", row.ring_size},
                        {"deficit", row.deficit},
                        {"paired_slots", row.paired_slots},
                        {"paired_size", row.paired_size},
                        {"paired_deficit", row.paired_deficit},
                        {"noncorner_size", row.noncorner_size},
                        {"shell_sizes", shells}});
    }
    return {{"schema_version", kSchemaVersion},
            {"p", cert.p},
            {"clique_size", cert.clique_size},
            {"new_colors", cert.new_colors},
            {"final_count", cert.final_count},
            {"rows", rows},
            {"verdict", cert.pass() ? "pass" : "fail"},
            {"reports", json::array({to_json(cert.thm1), to_json(cert.thm2), to_json(cert.thm3)})}};
}

json to_json(const Verdict& verdict)
{
    json violations = json::array();
    for (const auto& v : verdict.violations)
        violations.push_back({{"u", to_json(v.u)}, {"v", to_json(v.v)}, {"distance", v.distance}});
    return {{"schema_version", kSchemaVersion},
            {"verdict", verdict.ok() ? "pass" : "fail"},
            {"violations", violations},
            {"problems", verdict.problems}};
}

json to_json(const LatticeColoring& coloring)
{
    const Translation t1 = coloring.lattice.t1();
    const Translation t2 = coloring.lattice.t2();
    return {{"schema_version", kSchemaVersion},
            {"l", coloring.l},
            {"basis", json::array({json::array({t1.di, t1.dj}), json::array({t2.di, t2.dj})})},
            {"index", coloring.lattice.index()},
            {"color_count", coloring.color_count()},
            {"mode", to_string(coloring.mode())}};
}

json to_json(const Ring& ring)
{
    json members = json::array();
    for (int n = 1; n <= static_cast<int>(ring.size()); ++n) {
        const Vertex v = ring.member(n);
        members.push_back({{"n", n}, {"vertex", to_json(v)}, {"group", ring.group_of(n)}, {"corner", ring.is_corner(v)}});
    }
    json corners = json::array();
    for (Vertex v : ring.corners())
        corners.push_back(to_json(v));
    return {{"schema_version", kSchemaVersion},
            {"center", to_json(ring.center())},
            {"k", ring.k()},
            {"size", ring.size()},
            {"members", members},
            {"corners", corners}};
}

} // namespace hexspan
