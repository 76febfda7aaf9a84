#include "blockdec/glue.hpp"

#include <algorithm>
#include <sstream>

namespace blockdec {

void validate_plan(const GluePlan& plan, const BlockLibrary& lib) {
    const int n = plan.node_count;
    std::vector<int> cover(n, 0);
    std::vector<char> black(n, 0);
    for (const BlockInstance& b : plan.blocks) {
        if (b.tmpl < 0 || b.tmpl >= lib.size()) throw Error(Errc::UnknownBlock, "block template index out of range");
        const BlockTemplate& t = lib.at(b.tmpl);
        if (!lib.allowed(b.tmpl, plan.mode)) throw Error(Errc::ModeViolation, t.tag + " is only available in s-mode");
        if (int(b.nodes.size()) != t.arity())
            throw Error(Errc::ArityMismatch, t.tag + " takes " + std::to_string(t.arity()) + " nodes");
        for (int l = 0; l < t.arity(); ++l) {
            int v = b.nodes[l];
            if (v < 0 || v >= n) throw Error(Errc::NodeOutOfRange, "node " + std::to_string(v) + " out of range");
            for (int k = 0; k < l; ++k)
                if (b.nodes[k] == v)
                    throw Error(Errc::RuleViolation, "rule 1: two nodes of one " + t.tag + " identified at node " + std::to_string(v));
            ++cover[v];
            if (!t.white[l]) black[v] = 1;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (cover[v] == 0) throw Error(Errc::RuleViolation, "node " + std::to_string(v) + " belongs to no block");
        if (cover[v] > 2) throw Error(Errc::OverlapViolation, "rule 2: node " + std::to_string(v) + " is covered by more than two blocks");
        if (cover[v] == 2 && black[v])
            throw Error(Errc::OverlapViolation, "rule 2: black node " + std::to_string(v) + " is glued");
    }
}

GlueResult glue(const GluePlan& plan, const BlockLibrary& lib) {
    validate_plan(plan, lib);
    const int n = plan.node_count;
    std::vector<int> unit(size_t(n) * n, 0), units(size_t(n) * n, 0);
    std::vector<int> heavy(size_t(n) * n, 0), heavies(size_t(n) * n, 0);
    std::vector<int> cover(n, 0);
    std::vector<char> black(n, 0);
    for (const BlockInstance& b : plan.blocks) {
        const BlockTemplate& t = lib.at(b.tmpl);
        for (int l = 0; l < t.arity(); ++l) {
            ++cover[b.nodes[l]];
            if (!t.white[l]) black[b.nodes[l]] = 1;
        }
        for (const TemplateEdge& e : t.edges) {
            int i = b.nodes[e.from], j = b.nodes[e.to];
            int lo = std::min(i, j) * n + std::max(i, j);
            if (e.weight == 1) {
                ++unit[i * n + j];
                --unit[j * n + i];
                ++units[lo];
            } else {
                heavy[i * n + j] = e.weight;
                ++heavies[lo];
            }
        }
    }
    GlueResult r{Diagram(n, plan.mode), std::vector<char>(n, 0)};
    for (int i = 0; i < n; ++i) {
        r.black[i] = black[i] || cover[i] >= 2;
        for (int j = i + 1; j < n; ++j) {
            int lo = i * n + j;
            if (heavies[lo]) {
                if (heavies[lo] > 1 || units[lo])
                    throw Error(Errc::MixedWeightClash, "heavy edge between " + std::to_string(i) + " and " + std::to_string(j) + " meets another edge");
                if (heavy[i * n + j]) r.diagram.add_edge(i, j, heavy[i * n + j]);
                else r.diagram.add_edge(j, i, heavy[j * n + i]);
                continue;
            }
            int net = unit[i * n + j];
            if (net == 0) continue;
            if (std::abs(net) > 2) throw Error(Errc::ResultOutOfRange, "net multiplicity " + std::to_string(net));
            int w = std::abs(net) == 1 ? 1 : 4;
            if (net > 0) r.diagram.add_edge(i, j, w);
            else r.diagram.add_edge(j, i, w);
        }
    }
    return r;
}

std::string block_key(const BlockInstance& b, const BlockLibrary& lib) {
    const BlockTemplate& t = lib.at(b.tmpl);
    std::vector<int> best;
    for (const auto& p : t.automorphisms) {
        std::vector<int> c(b.nodes.size());
        for (size_t l = 0; l < c.size(); ++l) c[p[l]] = b.nodes[l];
        if (best.empty() || c < best) best = std::move(c);
    }
    std::string s = t.tag + "(";
    for (size_t l = 0; l < best.size(); ++l) s += (l ? "," : "") + std::to_string(best[l]);
    return s + ")";
}

std::string plan_key(const GluePlan& plan, const BlockLibrary& lib) {
    std::vector<std::string> keys;
    for (const auto& b : plan.blocks) keys.push_back(block_key(b, lib));
    std::sort(keys.begin(), keys.end());
    std::string s;
    for (size_t i = 0; i < keys.size(); ++i) s += (i ? ";" : "") + keys[i];
    return s.empty() ? "-" : s;
}

GluePlan parse_plan(const std::string& text, const BlockLibrary& lib) {
    GluePlan p;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0, declared = -1, maxnode = -1;
    auto fail = [&](const std::string& m) {
        throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": " + m);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        std::istringstream ls(raw);
        std::vector<std::string> t;
        for (std::string w; ls >> w;) t.push_back(w);
        if (t.empty()) continue;
        if (t[0] == "mode" && t.size() == 2) {
            p.mode = parse_mode(t[1]);
        } else if (t[0] == "nodes" && t.size() == 2) {
            declared = std::stoi(t[1]);
        } else if (t[0] == "block" && t.size() >= 2) {
            BlockInstance b;
            try {
                b.tmpl = lib.index_of(t[1]);
            } catch (const Error& e) {
                fail(e.what());
            }
            for (size_t k = 2; k < t.size(); ++k) {
                char* end = nullptr;
                long v = std::strtol(t[k].c_str(), &end, 10);
                if (*end || v < 0) fail("bad node id '" + t[k] + "'");
                b.nodes.push_back(int(v));
                maxnode = std::max(maxnode, int(v));
            }
            if (int(b.nodes.size()) != lib.at(b.tmpl).arity())
                throw Error(Errc::ArityMismatch, "line " + std::to_string(lineno) + ": " + t[1] + " takes " +
                                                     std::to_string(lib.at(b.tmpl).arity()) + " nodes");
            p.blocks.push_back(std::move(b));
        } else {
            fail("unexpected '" + t[0] + "'");
        }
    }
    p.node_count = declared >= 0 ? declared : maxnode + 1;
    return p;
}

std::string serialize_plan(const GluePlan& plan, const BlockLibrary& lib) {
    std::ostringstream out;
    out << "mode " << mode_name(plan.mode) << "\nnodes " << plan.node_count << "\n";
    for (const auto& b : plan.blocks) {
        out << "block " << lib.at(b.tmpl).tag;
        for (int v : b.nodes) out << " " << v;
        out << "\n";
    }
    return out.str();
}

GluePlan relabel_plan(const GluePlan& plan, const std::vector<int>& labeling) {
    GluePlan out = plan;
    for (auto& b : out.blocks)
        for (int& v : b.nodes) v = labeling[v];
    return out;
}

}  // namespace blockdec
