#include "blockdec/blocks.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#ifndef BLOCKDEC_DATA_DIR
#define BLOCKDEC_DATA_DIR "data"
#endif

namespace blockdec {

int BlockTemplate::label_index(const std::string& l) const {
    for (int i = 0; i < arity(); ++i)
        if (labels[i] == l) return i;
    return -1;
}

int BlockTemplate::white_count() const {
    return int(std::count(white.begin(), white.end(), 1));
}

int BlockTemplate::arrow(int a, int b) const {
    for (const auto& e : edges)
        if (e.from == a && e.to == b) return e.weight;
    return 0;
}

int BlockLibrary::index_of(const std::string& tag) const {
    for (int i = 0; i < size(); ++i)
        if (t_[i].tag == tag) return i;
    throw Error(Errc::UnknownBlock, "unknown block '" + tag + "'");
}

namespace {

[[noreturn]] void corrupt(int line, const std::string& msg) {
    throw Error(Errc::DataFileCorrupt, "block data line " + std::to_string(line) + ": " + msg);
}

std::vector<std::vector<int>> compute_automorphisms(const BlockTemplate& t) {
    std::vector<int> p(t.arity());
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 0; ok && i < t.arity(); ++i) ok = t.white[i] == t.white[p[i]];
        for (int a = 0; ok && a < t.arity(); ++a)
            for (int b = 0; ok && b < t.arity(); ++b) ok = t.arrow(a, b) == t.arrow(p[a], p[b]);
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct RawPiece {
    Piece piece;
    std::vector<std::pair<std::string, std::string>> arc_labels;
    int line = 0;
};

}  // namespace

BlockLibrary BlockLibrary::parse(const std::string& text) {
    BlockLibrary lib;
    std::map<std::string, RawPiece> pieces;
    std::vector<std::pair<std::string, int>> wanted;  // piece id per block, line

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    enum { None, InBlock, InSurface } section = None;
    RawPiece* cur_piece = nullptr;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        std::istringstream ls(raw);
        std::vector<std::string> t;
        for (std::string w; ls >> w;) t.push_back(w);
        if (t.empty()) continue;
        const std::string& kw = t[0];
        if (kw == "block") {
            if (t.size() != 2) corrupt(lineno, "expected 'block <tag>'");
            BlockTemplate b;
            b.tag = t[1];
            lib.t_.push_back(b);
            wanted.push_back({"", lineno});
            section = InBlock;
        } else if (kw == "surface") {
            if (t.size() != 2) corrupt(lineno, "expected 'surface <piece-id>'");
            if (pieces.count(t[1])) corrupt(lineno, "duplicate surface '" + t[1] + "'");
            cur_piece = &pieces[t[1]];
            cur_piece->piece.id = t[1];
            cur_piece->line = lineno;
            section = InSurface;
        } else if (section == InBlock) {
            BlockTemplate& b = lib.t_.back();
            if (kw == "kind" && t.size() == 2) {
                if (t[1] != "elementary" && t[1] != "unfolding") corrupt(lineno, "bad kind");
                b.unfolding = t[1] == "unfolding";
            } else if (kw == "node" && t.size() == 3) {
                if (b.label_index(t[1]) >= 0) corrupt(lineno, "duplicate label");
                if (t[2] != "white" && t[2] != "black") corrupt(lineno, "colour must be white or black");
                b.labels.push_back(t[1]);
                b.white.push_back(t[2] == "white");
            } else if (kw == "edge" && t.size() == 4) {
                int f = b.label_index(t[1]), to = b.label_index(t[2]);
                int w = std::atoi(t[3].c_str());
                if (f < 0 || to < 0 || f == to) corrupt(lineno, "bad edge endpoints");
                if (w != 1 && w != 2 && w != 4) corrupt(lineno, "bad edge weight");
                if (b.arrow(f, to) || b.arrow(to, f)) corrupt(lineno, "duplicate edge");
                if (w != 1 && !b.unfolding) corrupt(lineno, "elementary blocks carry unit edges only");
                b.edges.push_back({f, to, w});
            } else if (kw == "piece" && t.size() == 2) {
                wanted.back().first = t[1];
            } else {
                corrupt(lineno, "unexpected '" + kw + "' in block section");
            }
        } else if (section == InSurface) {
            Piece& p = cur_piece->piece;
            if (kw == "arc" && t.size() == 3) {
                if (std::find(p.arcs.begin(), p.arcs.end(), t[1]) != p.arcs.end()) corrupt(lineno, "duplicate arc");
                p.arcs.push_back(t[1]);
                cur_piece->arc_labels.push_back({t[1], t[2]});
            } else if (kw == "tri" && t.size() == 4) {
                std::array<int, 3> tri{};
                for (int k = 0; k < 3; ++k) {
                    if (t[k + 1] == "bd") { tri[k] = -1; continue; }
                    auto it = std::find(p.arcs.begin(), p.arcs.end(), t[k + 1]);
                    if (it == p.arcs.end()) corrupt(lineno, "unknown arc '" + t[k + 1] + "'");
                    tri[k] = int(it - p.arcs.begin());
                }
                p.tris.push_back(tri);
            } else {
                corrupt(lineno, "unexpected '" + kw + "' in surface section");
            }
        } else {
            corrupt(lineno, "content outside a section");
        }
    }

    for (size_t i = 0; i < lib.t_.size(); ++i) {
        BlockTemplate& b = lib.t_[i];
        auto [pid, line] = wanted[i];
        if (b.labels.size() < 2) corrupt(line, "block '" + b.tag + "' needs at least two nodes");
        for (size_t j = 0; j < i; ++j)
            if (lib.t_[j].tag == b.tag) corrupt(line, "duplicate block tag '" + b.tag + "'");
        auto it = pieces.find(pid);
        if (it == pieces.end()) corrupt(line, "block '" + b.tag + "' has no surface piece");
        b.piece = it->second.piece;
        for (auto& [arc, label] : it->second.arc_labels) {
            int li = b.label_index(label);
            if (li < 0) corrupt(it->second.line, "arc '" + arc + "' maps to unknown label '" + label + "'");
            b.piece.arc_label.push_back(li);
        }
        for (int l = 0; l < b.arity(); ++l)
            if (std::find(b.piece.arc_label.begin(), b.piece.arc_label.end(), l) == b.piece.arc_label.end())
                corrupt(it->second.line, "label '" + b.labels[l] + "' has no arc in piece '" + pid + "'");
        b.automorphisms = compute_automorphisms(b);
    }
    return lib;
}

BlockLibrary BlockLibrary::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::Io, "cannot open block data file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

std::string data_path(const std::string& file) {
    if (const char* env = std::getenv("BLOCKDEC_DATA"); env && *env) return std::string(env) + "/" + file;
    return std::string(BLOCKDEC_DATA_DIR) + "/" + file;
}

const BlockLibrary& default_library() {
    static const BlockLibrary lib = BlockLibrary::load(data_path("blocks.txt"));
    return lib;
}

std::vector<int> white_slots(const BlockInstance& b, const BlockLibrary& lib) {
    const BlockTemplate& t = lib.at(b.tmpl);
    std::vector<int> out;
    for (int l = 0; l < t.arity(); ++l)
        if (t.white[l]) out.push_back(b.nodes[l]);
    std::sort(out.begin(), out.end());
    return out;
}

Diagram instantiate(const BlockInstance& b, int node_count, Mode mode, const BlockLibrary& lib) {
    const BlockTemplate& t = lib.at(b.tmpl);
    if (int(b.nodes.size()) != t.arity())
        throw Error(Errc::ArityMismatch, t.tag + " takes " + std::to_string(t.arity()) + " nodes");
    if (!lib.allowed(b.tmpl, mode)) throw Error(Errc::ModeViolation, t.tag + " is only available in s-mode");
    Diagram d(node_count, mode);
    for (const auto& e : t.edges) d.add_edge(b.nodes[e.from], b.nodes[e.to], e.weight);
    return d;
}

}  // namespace blockdec
