#include "blockdec/report.hpp"

namespace blockdec {

Json plan_json(const GluePlan& plan, const BlockLibrary& lib) {
    Json blocks = Json::array();
    for (const auto& b : plan.blocks) blocks.push_back({{"block", lib.at(b.tmpl).tag}, {"nodes", b.nodes}});
    return {{"mode", mode_name(plan.mode)}, {"nodes", plan.node_count}, {"key", plan_key(plan, lib)}, {"blocks", blocks}};
}

Json diagram_json(const Diagram& d) {
    Json edges = Json::array();
    for (const Edge& e : d.edges()) edges.push_back({e.from, e.to, e.weight});
    return {{"mode", mode_name(d.mode())}, {"nodes", d.size()}, {"edges", edges}};
}

Json surface_json(const SurfaceInvariants& s) {
    return {{"genus", s.genus},   {"boundary", s.boundary},   {"punctures", s.punctures}, {"boundary_marked", s.boundary_marked},
            {"chi", s.chi},       {"triangles", s.triangles}, {"arcs", s.arcs}};
}

Json entry_json(const EntryReport& r, const BlockLibrary& lib) {
    Json decs = Json::array();
    for (size_t i = 0; i < r.plans.size(); ++i) {
        Json d = plan_json(r.plans[i], lib);
        d["surface"] = surface_json(r.surfaces[i]);
        decs.push_back(d);
    }
    return {{"id", r.id},
            {"mode", mode_name(r.mode)},
            {"expected_count", r.expected_count},
            {"found_count", r.found_count},
            {"count_ok", r.count_ok},
            {"count_provisional", r.count_provisional},
            {"reconstructed", r.reconstructed},
            {"expected_surface_unique", r.expected_unique},
            {"same_surface", r.same_surface},
            {"identical_invariants", r.identical_invariants},
            {"surface_ok", r.surface_ok},
            {"decompositions", decs}};
}

Json sweep_json(int max_nodes, Mode mode, const std::vector<SweepHit>& hits) {
    Json list = Json::array();
    for (const auto& h : hits)
        list.push_back({{"key", h.key},
                        {"catalog_id", h.catalog_id.empty() ? Json() : Json(h.catalog_id)},
                        {"decompositions", h.oracle_count},
                        {"decomposer_agrees", h.oracle_count == h.decomposer_count},
                        {"diagram", diagram_json(h.diagram)}});
    return {{"max_nodes", max_nodes}, {"mode", mode_name(mode)}, {"graphs", list}};
}

}  // namespace blockdec
