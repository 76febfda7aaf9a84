#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "blockdec/catalog.hpp"
#include "blockdec/oracle.hpp"

using namespace blockdec;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, double secs, double budget, const std::string& detail) {
    bool pass = ok && secs <= budget;
    if (!pass) ++failures;
    std::printf("criterion %d %s: %s (%.2fs, budget %.0fs)%s%s\n", id, name.c_str(), pass ? "PASS" : "FAIL", secs, budget,
                detail.empty() ? "" : " ", detail.c_str());
    std::fflush(stdout);
}

template <class F>
void run(int id, const std::string& name, double budget, F body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail += std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(id, name, ok, secs, budget, detail);
}

std::set<std::string> keys_of(const Enumeration& e) {
    std::set<std::string> s;
    for (const auto& d : e.decompositions) s.insert(d.canonical_key);
    return s;
}

bool criterion1(std::string& detail) {
    bool ok = true;
    for (const auto& e : load_catalog()) {
        EntryReport r = verify_entry(e);
        if (e.count_provisional) {
            detail += "[" + e.id + " provisional " + std::to_string(r.found_count) + "/" + std::to_string(r.expected_count) + "] ";
            continue;
        }
        if (!r.count_ok) {
            ok = false;
            detail += "[" + e.id + " " + std::to_string(r.found_count) + "/" + std::to_string(r.expected_count) + "] ";
        }
    }
    return ok;
}

bool criterion2(std::string& detail) {
    bool ok = true;
    for (const auto& e : load_catalog()) {
        EntryReport r = verify_entry(e);
        bool want = e.id != "5";
        if (r.found_count < 2 || r.same_surface != want) {
            ok = false;
            detail += "[" + e.id + "] ";
        }
    }
    return ok;
}

bool criterion3(std::string& detail) {
    OracleOptions opt;
    opt.max_blocks = 4;
    opt.max_nodes = 4;
    OracleIndex idx = build_index(opt);
    const int weights[] = {0, 1, -1, 4, -4};
    std::map<std::string, Diagram> diagrams;
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
        long total = 1;
        for (size_t k = 0; k < pairs.size(); ++k) total *= 5;
        for (long code = 0; code < total; ++code) {
            Diagram d(n);
            long c = code;
            for (auto [i, j] : pairs) {
                int w = weights[c % 5];
                c /= 5;
                if (w > 0) d.add_edge(i, j, w);
                if (w < 0) d.add_edge(j, i, -w);
            }
            if (!d.connected()) continue;
            CanonicalForm cf = canonical_form(d);
            diagrams.emplace(cf.key, relabel(d, cf.labeling));
        }
    }
    int decomposable = 0, bad = 0;
    for (const auto& [key, d] : diagrams) {
        std::set<std::string> want;
        if (auto* s = idx.lookup(d)) want = *s;
        std::set<std::string> got = keys_of(enumerate_decompositions(d));
        bool witness = is_decomposable(d).has_value();
        if (got != want || witness != !want.empty()) {
            if (++bad <= 3) detail += "[" + key + "] ";
        }
        decomposable += !want.empty();
    }
    detail += std::to_string(diagrams.size()) + " diagrams, " + std::to_string(decomposable) + " decomposable, " +
              std::to_string(bad) + " disagreements";
    return bad == 0;
}

bool criterion4(std::string& detail) {
    std::mt19937_64 rng(20240611);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
        Mode m = i % 2 ? Mode::S : Mode::Quiver;
        GluePlan p = random_plan(rng, 5, m);
        Diagram d = glue(p, default_library()).diagram;
        Enumeration e = enumerate_decompositions(d);
        bool ok = keys_of(e).count(plan_key(p, default_library())) == 1 && is_decomposable(d).has_value();
        for (const auto& dec : e.decompositions)
            ok = ok && serialize_diagram(glue(dec.plan, default_library()).diagram) == serialize_diagram(d);
        if (!ok && ++bad <= 3) detail += "[" + serialize_plan(p, default_library()) + "] ";
    }
    detail += std::to_string(bad) + "/1000 failed";
    return bad == 0;
}

bool criterion5(std::string& detail) {
    int checked = 0;
    bool ok = true;
    for (const auto& e : load_catalog()) {
        if (e.mode != Mode::Quiver) continue;
        for (const auto& dec : enumerate_decompositions(e.diagram).decompositions) {
            Triangulation t = assemble(dec.plan);
            ++checked;
            if (!(fold_to_nodes(t, signed_adjacency_matrix(t)) == to_matrix(e.diagram))) {
                ok = false;
                detail += "[" + e.id + " " + dec.canonical_key + "] ";
            }
        }
    }
    detail += std::to_string(checked) + " decompositions";
    return ok;
}

bool criterion6(std::string& detail) {
    const BlockLibrary& lib = default_library();
    int spike = lib.index_of("Spike");
    bool ok = true;
    for (Mode m : {Mode::Quiver, Mode::S}) {
        GluePlan parallel{m, 2, {{spike, {0, 1}}, {spike, {0, 1}}}};
        GluePlan anti{m, 2, {{spike, {0, 1}}, {spike, {1, 0}}}};
        Diagram a = glue(parallel, lib).diagram, b = glue(anti, lib).diagram;
        auto ea = a.edges();
        ok = ok && ea.size() == 1 && ea[0].weight == 4 && b.edges().empty();
    }
    if (!ok) detail = "unexpected glue result";
    return ok;
}

bool criterion7(std::string& detail) {
    auto catalog = load_catalog();
    bool ok = true;
    auto check = [&](int n, Mode m, std::set<std::string> want) {
        std::set<std::string> got;
        std::string extra;
        for (const auto& h : sweep_uniqueness(n, m, catalog, 2)) {
            got.insert(h.catalog_id.empty() ? h.key : h.catalog_id);
            if (h.oracle_count != h.decomposer_count) ok = false;
        }
        std::string list;
        for (const auto& g : got) list += (list.empty() ? "" : ",") + g;
        detail += "n<=" + std::to_string(n) + " " + mode_name(m) + ": {" + list + "} ";
        if (got != want) ok = false;
    };
    check(2, Mode::Quiver, {});
    check(2, Mode::S, {});
    check(3, Mode::Quiver, {"1", "2"});
    check(3, Mode::S, {"1", "2", "16", "17"});
    return ok;
}

std::string capture(const std::string& cmd) {
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    if (!p) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    for (size_t k; (k = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, k);
    int rc = pclose(p);
    return out + "\nexit " + std::to_string(rc);
}

bool criterion8(const std::string& exe, std::string& detail) {
    fs::path dir = fs::temp_directory_path() / "blockdec_acceptance";
    fs::create_directories(dir);
    std::vector<std::string> cmds;
    for (const auto& e : load_catalog()) {
        std::string stem = e.id;
        std::replace(stem.begin(), stem.end(), '\'', 'p');
        fs::path f = dir / ("graph" + stem + ".txt");
        std::ofstream(f) << serialize_diagram(e.diagram);
        std::string q = "'" + f.string() + "'", mode = std::string(" --mode=") + mode_name(e.mode);
        cmds.push_back(exe + " decompose " + q + mode + " --all --json");
        cmds.push_back(exe + " decompose " + q + mode);
        cmds.push_back(exe + " surface " + q + mode + " --all");
    }
    fs::path plan = dir / "three_spikes.plan";
    std::ofstream(plan) << "mode quiver\nnodes 3\nblock Spike 0 1\nblock Spike 1 2\nblock Spike 2 0\n";
    cmds.push_back(exe + " glue '" + plan.string() + "' --json");
    cmds.push_back(exe + " verify-catalog --json");
    cmds.push_back(exe + " sweep --max-nodes=4 --mode=quiver --json");
    cmds.push_back(exe + " sweep --max-nodes=3 --mode=s");
    int bad = 0, errors = 0;
    for (const auto& c : cmds) {
        bool threaded = c.find(" glue ") == std::string::npos;
        std::string a = capture(c), b = capture(c);
        if (a.find("\nexit 0") == std::string::npos) ++errors;
        std::string t = threaded ? capture(c + " --threads=4") : a;
        std::hash<std::string> h;
        if (h(a) != h(b) || h(a) != h(t)) {
            if (++bad <= 3) detail += "[" + c + "] ";
        }
    }
    detail += std::to_string(cmds.size()) + " commands x3 runs, " + std::to_string(bad) + " differ, " +
              std::to_string(errors) + " nonzero exits";
    return bad == 0 && errors == 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::string exe = argc > 1 ? argv[1] : "blockdec";
    run(1, "catalog counts", 5, criterion1);
    run(2, "surface uniqueness", 5, criterion2);
    run(3, "oracle equivalence n<=4", 600, criterion3);
    run(4, "random round trip", 120, criterion4);
    run(5, "signed adjacency round trip", 60, criterion5);
    run(6, "spike weight normalization", 5, criterion6);
    run(7, "uniqueness sweep", 60, criterion7);
    run(8, "determinism", 300, [&](std::string& d) { return criterion8(exe, d); });
    std::printf("%d criteria failed\n", failures);
    return failures ? 1 : 0;
}
