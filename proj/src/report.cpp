#include "vcss/report.hpp"

#include <fstream>
#include <sstream>

namespace vcss {

Json rational_json(const Rational& r) {
    return Json{{"num", r.num()}, {"den", r.den()}, {"text", r.str()}};
}

Json structure_report_json(const StructureReport& rep) {
    Json violations = Json::array();
    for (const auto& v : rep.violations) {
        Json item;
        switch (v.kind) {
            case StructureViolation::Kind::IrrelevantEdge:
                item["kind"] = "irrelevant-edge";
                item["edge"] = v.edge;
                item["cut"] = {v.cut.first, v.cut.second};
                break;
            case StructureViolation::Kind::NonIsolatingTwoCut:
                item["kind"] = "non-isolating-2-cut";
                item["cut"] = {v.cut.first, v.cut.second};
                break;
            case StructureViolation::Kind::RemovableFiveCycle:
                item["kind"] = "removable-5-cycle";
                item["cycle"] = v.cycle;
                break;
        }
        violations.push_back(std::move(item));
    }
    return Json{{"schema", 1},
                {"simple", rep.simple},
                {"two_vertex_connected", rep.two_connected},
                {"structured", rep.is_structured()},
                {"violations", violations}};
}

Json ledger_json(const CreditLedger& ledger) {
    Json entries = Json::array();
    for (const auto& e : ledger.entries) {
        const char* kind = e.kind == LedgerEntry::Kind::Component ? "component"
                           : e.kind == LedgerEntry::Kind::Block   ? "block"
                                                                  : "bridge";
        entries.push_back(Json{{"kind", kind},
                               {"key", e.key},
                               {"credit", rational_json(e.credit)},
                               {"vertices", e.vertices}});
    }
    return Json{{"scheme", ledger.scheme == Scheme::Standard ? "standard" : "legacy"},
                {"entries", entries},
                {"total", rational_json(ledger.total)}};
}

Json gadget_map_json(const ReducedHost& rh) {
    Json contracted = Json::array();
    for (const auto& cc : rh.map.contracted)
        contracted.push_back(Json{{"cycle", cc.cycle},
                                  {"merged_vertex", cc.merged_vertex},
                                  {"dropped_edges", cc.dropped_edges}});
    Json pairs = Json::array();
    for (const auto& pg : rh.map.pairs) {
        Json overlaps = Json::array();
        for (const auto& [guard, note] : pg.guard_overlaps)
            overlaps.push_back(Json{{"guard", guard}, {"note", note}});
        pairs.push_back(Json{{"removed", pg.removed},
                             {"guards", pg.guards},
                             {"cycle", pg.cycle},
                             {"new_vertices", Json{{"vprime", pg.vprime}, {"hub", pg.hub}}},
                             {"bundle_edges", pg.bundle_edges},
                             {"hub_edges", pg.hub_edges},
                             {"guard_overlaps", overlaps}});
    }
    return Json{{"schema", 1},
                {"contracted_six_cycles", contracted},
                {"pair_gadgets", pairs},
                {"edge_image", rh.map.edge_image},
                {"edge_preimage", rh.map.edge_preimage},
                {"vertex_image", rh.map.vertex_image}};
}

Json canonical_trace_json(const std::vector<RewriteStep>& trace) {
    Json out = Json::array();
    for (const auto& s : trace)
        out.push_back(Json{{"rule", s.rule},
                           {"removed_edge", s.removed_edge},
                           {"added_edge", s.added_edge},
                           {"potential_before", {s.potential_before.first, s.potential_before.second}},
                           {"potential_after", {s.potential_after.first, s.potential_after.second}}});
    return out;
}

Json reduce_trace_json(const std::vector<ReduceStep>& trace) {
    Json out = Json::array();
    for (const auto& s : trace)
        out.push_back(Json{{"case", s.case_id},
                           {"branch", s.branch},
                           {"size_before", s.size_before},
                           {"size_after", s.size_after},
                           {"components_before", s.comp_before},
                           {"components_after", s.comp_after},
                           {"cost_before", rational_json(s.cost_before)},
                           {"cost_after", rational_json(s.cost_after)},
                           {"delta_cost", rational_json(s.delta())}});
    return out;
}

namespace {

Json stage_json(const StageCosts& st) {
    return Json{{"size", st.size},
                {"cost", rational_json(st.cost_standard)},
                {"cost_legacy", rational_json(st.cost_legacy)}};
}

} // namespace

Json pipeline_report_json(const Multigraph& g, const PipelineResult& r) {
    Json report{{"schema", 1},
                {"instance", Json{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}}},
                {"feasible", r.feasible},
                {"completion_mode", r.completion_mode},
                {"completion_cost_ok", r.completion_cost_ok},
                {"cover_exact", r.cover_exact},
                {"stages", Json{{"initial", stage_json(r.initial)},
                                {"canonical", stage_json(r.canonical)},
                                {"reduced", stage_json(r.reduced)},
                                {"final", stage_json(r.final)}}},
                {"canonical_trace", canonical_trace_json(r.canonical_trace)},
                {"reduce_trace", reduce_trace_json(r.reduce_trace)}};
    if (r.oracle_opt) {
        report["oracle_opt"] = *r.oracle_opt;
        report["ratio"] = static_cast<double>(r.final.size) / *r.oracle_opt;
    }
    report["final_ledger"] = ledger_json(assign_credits(r.solution, Scheme::Standard));
    return report;
}

std::string to_dot(const Multigraph& g, const EdgeSet* cover) {
    std::ostringstream out;
    out << "graph g {\n  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        out << "  " << g.edge(e).a << " -- " << g.edge(e).b;
        if (cover)
            out << (cover->contains(e) ? " [penwidth=2]" : " [style=dotted]");
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw GraphError("cannot open " + path + " for writing");
    out << content;
}

} // namespace vcss
