#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "blockdec/oracle.hpp"
#include "blockdec/report.hpp"

using namespace blockdec;

namespace {

enum Exit { Ok = 0, Negative = 1, InputError = 2, InternalError = 3 };

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::Io, "cannot read '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<CatalogEntry> catalog_or_die(const std::string& path) {
    try {
        return load_catalog(path);
    } catch (const Error& e) {
        throw Error(Errc::DataFileCorrupt, e.what());
    }
}

std::string digest(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

int exit_for(Errc c) {
    switch (c) {
        case Errc::DataFileCorrupt:
        case Errc::NonSurfaceComplex:
        case Errc::Timeout: return InternalError;
        default: return InputError;
    }
}

int emit(const std::string& cmd, const std::string& input, int code, const Json& result) {
    Json out = {{"command", cmd}, {"input_digest", digest(input)}, {"exit_code", code}, {"result", result}};
    std::cout << out.dump(2) << "\n";
    return code;
}

struct Options {
    std::string path, mode = "quiver", entry;
    bool all = false, json = false;
    size_t limit = 10000;
    int threads = 1, decomposition = 0, max_nodes = 3, max_blocks = 1, index_nodes = 0;
};

int cmd_decompose(const Options& o) {
    std::string text = read_file(o.path);
    Diagram d = parse_diagram(text, parse_mode(o.mode));
    Enumeration e;
    if (o.all) {
        e = enumerate_decompositions(d, o.limit, o.threads);
    } else if (auto one = is_decomposable(d)) {
        e.decompositions.push_back(*one);
    }
    int code = e.decompositions.empty() ? Negative : Ok;
    if (o.json) {
        Json plans = Json::array();
        for (const auto& dec : e.decompositions) plans.push_back(plan_json(dec.plan));
        return emit("decompose", text,
                    code, {{"decomposable", code == Ok}, {"count", plans.size()}, {"limit_exceeded", e.limit_exceeded}, {"decompositions", plans}});
    }
    if (code == Negative) {
        std::cout << "not decomposable\n";
        return code;
    }
    if (o.all) std::cout << "# " << e.decompositions.size() << " decomposition(s)" << (e.limit_exceeded ? ", limit reached" : "") << "\n";
    for (size_t i = 0; i < e.decompositions.size(); ++i)
        std::cout << (i ? "\n" : "") << serialize_plan(e.decompositions[i].plan, default_library());
    return code;
}

int cmd_surface(const Options& o) {
    std::string text = read_file(o.path);
    Diagram d = parse_diagram(text, parse_mode(o.mode));
    Enumeration e = enumerate_decompositions(d, o.limit, o.threads);
    if (e.decompositions.empty()) return emit("surface", text, Negative, {{"decomposable", false}});
    std::vector<size_t> pick;
    if (o.all) {
        for (size_t i = 0; i < e.decompositions.size(); ++i) pick.push_back(i);
    } else {
        size_t k = o.decomposition ? size_t(o.decomposition) : 1;
        if (k > e.decompositions.size())
            throw Error(Errc::ResultOutOfRange, "decomposition " + std::to_string(k) + " requested, " +
                                                    std::to_string(e.decompositions.size()) + " exist");
        pick.push_back(k - 1);
    }
    Json list = Json::array();
    std::vector<SurfaceInvariants> inv;
    for (size_t i : pick) {
        const GluePlan& p = e.decompositions[i].plan;
        inv.push_back(surface_invariants(assemble(p)));
        list.push_back({{"index", i + 1}, {"plan", plan_json(p)}, {"surface", surface_json(inv.back())}});
    }
    Json result = {{"decomposable", true}, {"surfaces", list}};
    if (o.all) {
        bool unique = true;
        for (const auto& s : inv) unique = unique && same_surface(inv[0], s);
        result["unique_surface"] = unique;
    }
    return emit("surface", text, Ok, result);
}

int cmd_verify(const Options& o) {
    std::string path = data_path("catalog.txt");
    auto catalog = catalog_or_die(path);
    std::vector<EntryReport> reports;
    if (!o.entry.empty()) reports.push_back(verify_entry(find_entry(catalog, o.entry), o.threads));
    else
        for (const auto& e : catalog) reports.push_back(verify_entry(e, o.threads));
    bool pass = true;
    for (const auto& r : reports) pass = pass && (r.count_ok || r.count_provisional) && r.surface_ok;
    int code = pass ? Ok : Negative;
    if (o.json) {
        Json list = Json::array();
        for (const auto& r : reports) list.push_back(entry_json(r));
        return emit("verify-catalog", read_file(path), code, list);
    }
    for (const auto& r : reports) {
        std::cout << "graph " << r.id << ": count " << r.found_count << "/" << r.expected_count
                  << (r.count_ok ? " ok" : r.count_provisional ? " provisional" : " MISMATCH") << ", surface "
                  << (r.same_surface ? "unique" : "not unique") << (r.surface_ok ? " ok" : " MISMATCH") << "\n";
    }
    return code;
}

int cmd_sweep(const Options& o) {
    Mode m = parse_mode(o.mode);
    std::string path = data_path("catalog.txt");
    auto hits = sweep_uniqueness(o.max_nodes, m, catalog_or_die(path), o.threads);
    bool agree = true;
    for (const auto& h : hits) agree = agree && h.oracle_count == h.decomposer_count;
    if (!agree) throw std::logic_error("decomposer and oracle disagree");
    if (o.json) return emit("sweep", read_file(path), Ok, sweep_json(o.max_nodes, m, hits));
    std::cout << "# " << hits.size() << " graph(s) with more than one decomposition\n";
    for (const auto& h : hits)
        std::cout << (h.catalog_id.empty() ? "uncatalogued" : "graph " + h.catalog_id) << " " << h.oracle_count << " " << h.key << "\n";
    return Ok;
}

int cmd_glue(const Options& o) {
    std::string text = read_file(o.path);
    GluePlan p = parse_plan(text, default_library());
    GlueResult r = glue(p, default_library());
    if (o.json) {
        std::vector<int> black;
        for (int v = 0; v < r.diagram.size(); ++v)
            if (r.black[v]) black.push_back(v);
        return emit("glue", text, Ok, {{"diagram", diagram_json(r.diagram)}, {"black", black}});
    }
    std::cout << serialize_diagram(r.diagram);
    return Ok;
}

int cmd_index(const Options& o) {
    OracleOptions opt;
    opt.max_blocks = o.max_blocks;
    opt.mode = parse_mode(o.mode);
    opt.threads = o.threads;
    if (o.index_nodes > 0) opt.max_nodes = o.index_nodes;
    OracleIndex idx = build_index(opt);
    idx.save(o.path);
    size_t plans = 0;
    for (const auto& [k, v] : idx.entries) plans += v.size();
    std::cout << idx.entries.size() << " diagrams, " << plans << " labelled plans\n";
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Block decompositions of quivers and s-diagrams"};
    app.require_subcommand(1);
    Options o;

    auto* dec = app.add_subcommand("decompose", "find a block decomposition");
    dec->add_option("path", o.path, "diagram file")->required();
    dec->add_flag("--all", o.all, "enumerate all decompositions");
    dec->add_option("--mode", o.mode, "quiver or s")->check(CLI::IsMember({"quiver", "s"}));
    dec->add_option("--limit", o.limit, "enumeration cap");
    dec->add_flag("--json", o.json);
    dec->add_option("--threads", o.threads)->check(CLI::PositiveNumber);

    auto* surf = app.add_subcommand("surface", "surface invariants of decompositions");
    surf->add_option("path", o.path, "diagram file")->required();
    surf->add_option("--mode", o.mode)->check(CLI::IsMember({"quiver", "s"}));
    auto* k = surf->add_option("--decomposition", o.decomposition, "1-based index")->check(CLI::PositiveNumber);
    surf->add_flag("--all", o.all)->excludes(k);
    surf->add_option("--limit", o.limit);
    surf->add_option("--threads", o.threads)->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify-catalog", "check the catalog counts and surfaces");
    ver->add_option("--entry", o.entry, "graph id");
    ver->add_flag("--json", o.json);
    ver->add_option("--threads", o.threads)->check(CLI::PositiveNumber);

    auto* sw = app.add_subcommand("sweep", "diagrams with more than one decomposition");
    sw->add_option("--max-nodes", o.max_nodes)->check(CLI::Range(1, 6));
    sw->add_option("--mode", o.mode)->check(CLI::IsMember({"quiver", "s"}));
    sw->add_flag("--json", o.json);
    sw->add_option("--threads", o.threads)->check(CLI::PositiveNumber);

    auto* gl = app.add_subcommand("glue", "glue a plan file");
    gl->add_option("planfile", o.path)->required();
    gl->add_flag("--json", o.json);

    auto* ix = app.add_subcommand("index", "write the brute-force plan index");
    ix->add_option("--out", o.path)->required();
    ix->add_option("--max-blocks", o.max_blocks)->check(CLI::Range(1, 6));
    ix->add_option("--max-nodes", o.index_nodes);
    ix->add_option("--mode", o.mode)->check(CLI::IsMember({"quiver", "s"}));
    ix->add_option("--threads", o.threads)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : InputError;
    }

    try {
        default_library();
    } catch (const Error& e) {
        std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return InternalError;
    }

    try {
        if (*dec) return cmd_decompose(o);
        if (*surf) return cmd_surface(o);
        if (*ver) return cmd_verify(o);
        if (*sw) return cmd_sweep(o);
        if (*gl) return cmd_glue(o);
        if (*ix) return cmd_index(o);
    } catch (const Error& e) {
        std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return exit_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return InternalError;
    }
    return InternalError;
}
