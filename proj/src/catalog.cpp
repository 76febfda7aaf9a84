#include "blockdec/catalog.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "blockdec/oracle.hpp"

namespace blockdec {

namespace {

void flush(std::vector<CatalogEntry>& out, CatalogEntry& cur, std::string& body, bool& open, bool& counted) {
    if (!open) return;
    if (!counted) throw Error(Errc::DataFileCorrupt, "graph " + cur.id + ": missing expect_count");
    try {
        cur.diagram = parse_diagram(body, cur.mode);
    } catch (const Error& e) {
        throw Error(Errc::DataFileCorrupt, "graph " + cur.id + ": " + e.what());
    }
    out.push_back(cur);
    cur = CatalogEntry();
    body.clear();
    open = counted = false;
}

bool parse_bool(const std::string& s, const std::string& id) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw Error(Errc::DataFileCorrupt, "graph " + id + ": expected true or false, got '" + s + "'");
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
    std::vector<CatalogEntry> out;
    CatalogEntry cur;
    std::string body, raw;
    bool open = false, counted = false;
    std::istringstream in(text);
    while (std::getline(in, raw)) {
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string word, arg;
        if (!(ls >> word)) continue;
        ls >> arg;
        if (word == "graph") {
            flush(out, cur, body, open, counted);
            if (arg.empty()) throw Error(Errc::DataFileCorrupt, "graph without id");
            cur.id = arg;
            open = true;
            continue;
        }
        if (!open) throw Error(Errc::DataFileCorrupt, "line outside a graph section: '" + raw + "'");
        if (word == "mode") {
            cur.mode = parse_mode(arg);
        } else if (word == "expect_count") {
            cur.expected_count = std::stoi(arg);
            counted = true;
        } else if (word == "surface_unique") {
            cur.surface_unique = parse_bool(arg, cur.id);
        } else if (word == "flag") {
            if (arg == "reconstructed") cur.reconstructed = true;
            else if (arg == "count_provisional") cur.count_provisional = true;
            else throw Error(Errc::DataFileCorrupt, "graph " + cur.id + ": unknown flag '" + arg + "'");
        } else {
            body += line + "\n";
        }
    }
    flush(out, cur, body, open, counted);
    return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::Io, "cannot read catalog '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_catalog(ss.str());
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& id) {
    for (const auto& e : catalog)
        if (e.id == id) return e;
    throw Error(Errc::Parse, "no catalog entry '" + id + "'");
}

EntryReport verify_entry(const CatalogEntry& e, int threads, const BlockLibrary& lib) {
    EntryReport r;
    r.id = e.id;
    r.mode = e.mode;
    r.expected_count = e.expected_count;
    r.expected_unique = e.surface_unique;
    r.reconstructed = e.reconstructed;
    r.count_provisional = e.count_provisional;
    Enumeration en = enumerate_decompositions(e.diagram, std::nullopt, threads, lib);
    for (auto& d : en.decompositions) {
        r.surfaces.push_back(surface_invariants(assemble(d.plan, lib)));
        r.keys.push_back(d.canonical_key);
        r.plans.push_back(std::move(d.plan));
    }
    r.found_count = int(r.plans.size());
    r.count_ok = r.found_count == e.expected_count;
    r.same_surface = r.identical_invariants = true;
    for (size_t i = 1; i < r.surfaces.size(); ++i) {
        r.same_surface = r.same_surface && same_surface(r.surfaces[0], r.surfaces[i]);
        r.identical_invariants = r.identical_invariants && r.surfaces[0] == r.surfaces[i];
    }
    r.surface_ok = r.found_count > 0 && r.same_surface == e.surface_unique;
    return r;
}

std::vector<SweepHit> sweep_uniqueness(int max_nodes, Mode mode, const std::vector<CatalogEntry>& catalog, int threads,
                                       const BlockLibrary& lib) {
    if (max_nodes < 1 || max_nodes > 6) throw Error(Errc::ResultOutOfRange, "sweep supports 1..6 nodes");
    std::map<std::string, std::string> ids;
    for (const auto& e : catalog)
        if (mode == Mode::S || e.mode == Mode::Quiver) ids.emplace(canonical_form(e.diagram).key, e.id);

    OracleOptions opt;
    opt.max_blocks = max_nodes;
    opt.max_nodes = max_nodes;
    opt.mode = mode;
    opt.threads = threads;
    OracleIndex idx = build_index(opt, lib);

    std::map<std::string, Diagram> diagrams;
    for (const GluePlan& p : enumerate_plans(opt, lib)) {
        Diagram d = glue(p, lib).diagram;
        if (!d.connected()) continue;
        CanonicalForm cf = canonical_form(d);
        diagrams.emplace(cf.key, relabel(d, cf.labeling));
    }
    std::vector<SweepHit> out;
    for (auto& [key, d] : diagrams) {
        const auto& keys = idx.entries.at(key);
        if (keys.size() < 2) continue;
        SweepHit h{key, d, int(keys.size()), 0, ""};
        h.decomposer_count = int(enumerate_decompositions(d, std::nullopt, 1, lib).decompositions.size());
        if (auto it = ids.find(key); it != ids.end()) h.catalog_id = it->second;
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace blockdec
