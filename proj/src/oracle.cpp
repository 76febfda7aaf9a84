#include "blockdec/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "blockdec/canon.hpp"

namespace blockdec {

namespace {

LabeledDigraph expand(const GluePlan& plan, const BlockLibrary& lib) {
    int total = plan.node_count;
    for (const auto& b : plan.blocks) total += int(b.nodes.size());
    LabeledDigraph g(total);
    int base = plan.node_count;
    for (const auto& b : plan.blocks) {
        const BlockTemplate& t = lib.at(b.tmpl);
        for (int l = 0; l < t.arity(); ++l) {
            g.color[base + l] = 1 + 2 * b.tmpl + (t.white[l] ? 1 : 0);
            g.at(base + l, b.nodes[l]) = 8;
        }
        for (const auto& e : t.edges) g.at(base + e.from, base + e.to) = e.weight;
        base += t.arity();
    }
    return g;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// Relabel nodes canonically so each isomorphism class has one representative.
std::pair<std::string, GluePlan> canonical_plan(const GluePlan& plan, const BlockLibrary& lib) {
    LabeledDigraph g = expand(plan, lib);
    Canonical c = canonical_labeling(g);
    std::vector<int> lab(plan.node_count);
    for (int v = 0; v < plan.node_count; ++v) lab[v] = c.labeling[v];
    GluePlan out = relabel_plan(plan, lab);
    for (auto& b : out.blocks) {
        const BlockTemplate& t = lib.at(b.tmpl);
        std::vector<int> best = b.nodes;
        for (const auto& p : t.automorphisms) {
            std::vector<int> cand(b.nodes.size());
            for (size_t l = 0; l < cand.size(); ++l) cand[p[l]] = b.nodes[l];
            best = std::min(best, cand);
        }
        b.nodes = best;
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const BlockInstance& a, const BlockInstance& b) { return std::tie(a.tmpl, a.nodes) < std::tie(b.tmpl, b.nodes); });
    return {std::to_string(plan.node_count) + "|" + join(c.cert), out};
}

void extend(const GluePlan& p, const OracleOptions& opt, const BlockLibrary& lib, std::map<std::string, GluePlan>& out) {
    std::vector<int> cover(p.node_count, 0);
    std::vector<char> black(p.node_count, 0);
    for (const auto& b : p.blocks) {
        const BlockTemplate& t = lib.at(b.tmpl);
        for (int l = 0; l < t.arity(); ++l) {
            ++cover[b.nodes[l]];
            if (!t.white[l]) black[b.nodes[l]] = 1;
        }
    }
    std::vector<int> open;
    for (int v = 0; v < p.node_count; ++v)
        if (cover[v] == 1 && !black[v]) open.push_back(v);

    for (int ti = 0; ti < lib.size(); ++ti) {
        if (!lib.allowed(ti, opt.mode)) continue;
        const BlockTemplate& t = lib.at(ti);
        std::vector<int> a(t.arity(), -1);
        auto rec = [&](auto&& self, int l, int glued, int fresh) -> void {
            if (p.node_count + fresh > opt.max_nodes) return;
            if (l == t.arity()) {
                if (!glued) return;
                GluePlan q = p;
                q.node_count = p.node_count + fresh;
                BlockInstance b{ti, a};
                int next = p.node_count;
                for (int& v : b.nodes)
                    if (v < 0) v = next++;
                q.blocks.push_back(b);
                auto [key, rep] = canonical_plan(q, lib);
                out.emplace(std::move(key), std::move(rep));
                return;
            }
            self(self, l + 1, glued, fresh + 1);
            if (!t.white[l]) return;
            for (int v : open) {
                if (std::find(a.begin(), a.end(), v) != a.end()) continue;
                a[l] = v;
                self(self, l + 1, glued + 1, fresh);
                a[l] = -1;
            }
        };
        rec(rec, 0, 0, 0);
    }
}

}  // namespace

std::string plan_iso_key(const GluePlan& plan, const BlockLibrary& lib) {
    return canonical_plan(plan, lib).first;
}

std::vector<GluePlan> enumerate_plans(const OracleOptions& opt, const BlockLibrary& lib) {
    std::map<std::string, GluePlan> all, level;
    for (int ti = 0; ti < lib.size(); ++ti) {
        if (!lib.allowed(ti, opt.mode) || opt.max_blocks < 1) continue;
        const BlockTemplate& t = lib.at(ti);
        if (t.arity() > opt.max_nodes) continue;
        GluePlan p{opt.mode, t.arity(), {}};
        BlockInstance b{ti, {}};
        for (int l = 0; l < t.arity(); ++l) b.nodes.push_back(l);
        p.blocks.push_back(b);
        auto [key, rep] = canonical_plan(p, lib);
        level.emplace(key, rep);
    }
    all = level;
    for (int k = 2; k <= opt.max_blocks && !level.empty(); ++k) {
        std::vector<const GluePlan*> work;
        for (auto& [key, p] : level) work.push_back(&p);
        int nt = std::max(1, std::min<int>(opt.threads, int(work.size())));
        std::vector<std::map<std::string, GluePlan>> parts(nt);
        std::vector<std::thread> pool;
        for (int i = 0; i < nt; ++i)
            pool.emplace_back([&, i] {
                for (size_t j = i; j < work.size(); j += nt) extend(*work[j], opt, lib, parts[i]);
            });
        for (auto& th : pool) th.join();
        std::map<std::string, GluePlan> next;
        for (auto& part : parts) next.merge(part);
        level = std::move(next);
        for (auto& [key, p] : level) all.emplace(key, p);
    }
    std::vector<GluePlan> out;
    out.reserve(all.size());
    for (auto& [key, p] : all) out.push_back(std::move(p));
    return out;
}

const std::set<std::string>* OracleIndex::lookup(const Diagram& d) const {
    auto it = entries.find(canonical_form(d).key);
    return it == entries.end() ? nullptr : &it->second;
}

OracleIndex build_index(const OracleOptions& opt, const BlockLibrary& lib) {
    OracleIndex idx;
    idx.params = opt;
    for (int ti = 0; ti < lib.size(); ++ti)
        if (lib.allowed(ti, opt.mode)) idx.blocks.push_back(lib.at(ti).tag);
    for (const GluePlan& p : enumerate_plans(opt, lib)) {
        GlueResult r = glue(p, lib);
        std::string dkey = canonical_form(r.diagram).key;
        auto& keys = idx.entries[dkey];
        for (const auto& lab : canonical_labelings(r.diagram)) keys.insert(plan_key(relabel_plan(p, lab), lib));
    }
    return idx;
}

std::set<std::string> canonical_plan_keys(const Diagram& d, const std::vector<GluePlan>& plans, const BlockLibrary& lib) {
    std::vector<int> lab = canonical_form(d).labeling;
    std::set<std::string> out;
    for (const auto& p : plans) out.insert(plan_key(relabel_plan(p, lab), lib));
    return out;
}

void OracleIndex::save(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw Error(Errc::Io, "cannot write index '" + path + "'");
    f << "# blockdec-index max_blocks=" << params.max_blocks << " mode=" << mode_name(params.mode)
      << " max_nodes=" << (params.max_nodes == INT_MAX ? -1 : params.max_nodes) << " blocks=";
    for (size_t i = 0; i < blocks.size(); ++i) f << (i ? "," : "") << blocks[i];
    f << "\n";
    for (const auto& [dk, keys] : entries)
        for (const auto& pk : keys) f << dk << " " << pk << "\n";
    if (!f) throw Error(Errc::Io, "write failed for '" + path + "'");
}

OracleIndex OracleIndex::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::Io, "cannot read index '" + path + "'");
    OracleIndex idx;
    std::string line;
    if (!std::getline(f, line) || line.rfind("# blockdec-index", 0) != 0)
        throw Error(Errc::DataFileCorrupt, "missing index header in '" + path + "'");
    std::istringstream hs(line.substr(17));
    for (std::string kv; hs >> kv;) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error(Errc::DataFileCorrupt, "bad index header field '" + kv + "'");
        std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
        if (k == "max_blocks") idx.params.max_blocks = std::stoi(v);
        else if (k == "mode") idx.params.mode = parse_mode(v);
        else if (k == "max_nodes") idx.params.max_nodes = std::stoi(v) < 0 ? INT_MAX : std::stoi(v);
        else if (k == "blocks") {
            std::istringstream bs(v);
            for (std::string t; std::getline(bs, t, ',');) idx.blocks.push_back(t);
        }
    }
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        auto sp = line.find(' ');
        if (sp == std::string::npos) throw Error(Errc::DataFileCorrupt, "bad index line");
        idx.entries[line.substr(0, sp)].insert(line.substr(sp + 1));
    }
    return idx;
}

GluePlan random_plan(std::mt19937_64& rng, int max_blocks, Mode mode, const BlockLibrary& lib) {
    std::vector<int> allowed;
    for (int ti = 0; ti < lib.size(); ++ti)
        if (lib.allowed(ti, mode)) allowed.push_back(ti);
    int k = std::uniform_int_distribution<int>(1, max_blocks)(rng);
    GluePlan p{mode, 0, {}};
    std::vector<int> cover;
    std::vector<char> black;
    for (int i = 0; i < k; ++i) {
        int ti = allowed[std::uniform_int_distribution<size_t>(0, allowed.size() - 1)(rng)];
        const BlockTemplate& t = lib.at(ti);
        BlockInstance b{ti, std::vector<int>(t.arity(), -1)};
        for (int l = 0; l < t.arity(); ++l) {
            std::vector<int> open;
            if (t.white[l])
                for (int v = 0; v < p.node_count; ++v)
                    if (cover[v] == 1 && !black[v] && std::find(b.nodes.begin(), b.nodes.end(), v) == b.nodes.end())
                        open.push_back(v);
            if (!open.empty() && std::uniform_int_distribution<int>(0, 2)(rng) > 0) {
                b.nodes[l] = open[std::uniform_int_distribution<size_t>(0, open.size() - 1)(rng)];
            } else {
                b.nodes[l] = p.node_count++;
                cover.push_back(0);
                black.push_back(0);
            }
        }
        for (int l = 0; l < t.arity(); ++l) {
            ++cover[b.nodes[l]];
            if (!t.white[l]) black[b.nodes[l]] = 1;
        }
        p.blocks.push_back(b);
    }
    return p;
}

}  // namespace blockdec
