#include "blockdec/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "blockdec/canon.hpp"

namespace blockdec {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidWeight: return "InvalidWeight";
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::DuplicatePair: return "DuplicatePair";
        case Errc::NodeOutOfRange: return "NodeOutOfRange";
        case Errc::NotSkewSymmetrizable: return "NotSkewSymmetrizable";
        case Errc::Parse: return "ParseError";
        case Errc::UnknownBlock: return "UnknownBlock";
        case Errc::DataFileCorrupt: return "DataFileCorrupt";
        case Errc::ArityMismatch: return "ArityMismatch";
        case Errc::ModeViolation: return "ModeViolation";
        case Errc::RuleViolation: return "RuleViolation";
        case Errc::OverlapViolation: return "OverlapViolation";
        case Errc::MixedWeightClash: return "MixedWeightClash";
        case Errc::ResultOutOfRange: return "ResultOutOfRange";
        case Errc::NonSurfaceComplex: return "NonSurfaceComplex";
        case Errc::Io: return "IoError";
        case Errc::Timeout: return "Timeout";
    }
    return "Unknown";
}

const char* mode_name(Mode m) { return m == Mode::Quiver ? "quiver" : "s"; }

Mode parse_mode(const std::string& s) {
    if (s == "quiver") return Mode::Quiver;
    if (s == "s" || s == "s-diagram") return Mode::S;
    throw Error(Errc::Parse, "unknown mode '" + s + "'");
}

bool weight_allowed(Mode m, int w) {
    return w == 1 || w == 4 || (m == Mode::S && w == 2);
}

Diagram::Diagram(int n, Mode mode) : n_(n), mode_(mode), w_(size_t(n) * n, 0) {
    if (n < 0) throw Error(Errc::NodeOutOfRange, "negative node count");
}

void Diagram::set_mode(Mode m) {
    if (m == Mode::Quiver)
        for (int w : w_)
            if (w == 2) throw Error(Errc::ModeViolation, "weight-2 edge in quiver mode");
    mode_ = m;
}

void Diagram::add_edge(int from, int to, int weight) {
    if (from < 0 || to < 0 || from >= n_ || to >= n_)
        throw Error(Errc::NodeOutOfRange, "edge endpoint out of range");
    if (from == to) throw Error(Errc::SelfLoop, "self-loop at node " + std::to_string(from));
    if (!weight_allowed(mode_, weight))
        throw Error(Errc::InvalidWeight, "weight " + std::to_string(weight) + " not allowed in " + mode_name(mode_) + " mode");
    if (this->weight(from, to))
        throw Error(Errc::DuplicatePair, "pair " + std::to_string(from) + "," + std::to_string(to) + " already has an edge");
    w_[from * n_ + to] = weight;
}

std::vector<Edge> Diagram::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (arrow(i, j)) out.push_back({i, j, arrow(i, j)});
    return out;
}

std::vector<int> Diagram::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (weight(u, v)) out.push_back(u);
    return out;
}

bool Diagram::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : neighbors(v))
            if (!seen[u]) { seen[u] = 1; ++count; stack.push_back(u); }
    }
    return count == n_;
}

ExchangeMatrix to_matrix(const Diagram& d) {
    ExchangeMatrix m{d.size(), std::vector<int>(size_t(d.size()) * d.size(), 0)};
    for (const Edge& e : d.edges()) {
        switch (e.weight) {
            case 1: m.at(e.from, e.to) = 1; m.at(e.to, e.from) = -1; break;
            case 2: m.at(e.from, e.to) = 2; m.at(e.to, e.from) = -1; break;
            case 4: m.at(e.from, e.to) = 2; m.at(e.to, e.from) = -2; break;
        }
    }
    return m;
}

namespace {

struct Frac {
    long long p, q;
};

bool symmetrizable(const ExchangeMatrix& m) {
    const int n = m.n;
    std::vector<Frac> d(n, {0, 0});
    for (int s = 0; s < n; ++s) {
        if (d[s].q) continue;
        d[s] = {1, 1};
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (!m.at(i, j)) continue;
                // d_i b_ij = -d_j b_ji
                Frac want{-d[i].p * m.at(i, j), d[i].q * m.at(j, i)};
                if (want.q < 0) { want.p = -want.p; want.q = -want.q; }
                long long g = std::gcd(std::llabs(want.p), want.q);
                want.p /= g;
                want.q /= g;
                if (!d[j].q) { d[j] = want; stack.push_back(j); }
                else if (d[j].p != want.p || d[j].q != want.q) return false;
            }
        }
    }
    return true;
}

}  // namespace

Diagram from_matrix(const ExchangeMatrix& m, Mode mode) {
    Diagram d(m.n, mode);
    for (int i = 0; i < m.n; ++i) {
        if (m.at(i, i)) throw Error(Errc::SelfLoop, "nonzero diagonal at " + std::to_string(i));
        for (int j = i + 1; j < m.n; ++j) {
            int a = m.at(i, j), c = m.at(j, i);
            if (!a && !c) continue;
            if (!(a > 0 && c < 0) && !(a < 0 && c > 0))
                throw Error(Errc::NotSkewSymmetrizable, "entries (" + std::to_string(i) + "," + std::to_string(j) + ") are not sign-skew-symmetric");
            if (mode == Mode::Quiver && a != -c)
                throw Error(Errc::NotSkewSymmetrizable, "quiver mode needs a skew-symmetric matrix");
            int w = std::abs(a * c);
            if (!weight_allowed(mode, w)) throw Error(Errc::InvalidWeight, "weight " + std::to_string(w) + " not allowed");
            if (a > 0) d.add_edge(i, j, w);
            else d.add_edge(j, i, w);
        }
    }
    if (!symmetrizable(m)) throw Error(Errc::NotSkewSymmetrizable, "no symmetrizer exists");
    return d;
}

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
    throw Error(Errc::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

int to_int(const std::string& tok, int line, int col) {
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (tok.empty() || *end) parse_fail(line, col, "expected integer, got '" + tok + "'");
    return int(v);
}

struct Tok {
    std::string s;
    int col;
};

std::vector<Tok> tokenize(const std::string& line) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
        out.push_back({line.substr(i, j - i), int(i) + 1});
        i = j;
    }
    return out;
}

}  // namespace

Diagram parse_diagram(const std::string& text, Mode mode) {
    std::istringstream in(text);
    std::string raw;
    std::vector<std::pair<int, std::vector<Tok>>> lines;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto t = tokenize(raw);
        if (!t.empty()) lines.push_back({lineno, std::move(t)});
    }
    if (lines.empty()) parse_fail(1, 1, "empty input");

    if (lines[0].second[0].s == "nodes") {
        auto& [ln, t] = lines[0];
        if (t.size() != 2) parse_fail(ln, t[0].col, "expected 'nodes <n>'");
        int n = to_int(t[1].s, ln, t[1].col);
        if (n < 0) parse_fail(ln, t[1].col, "negative node count");
        Diagram d(n, mode);
        for (size_t k = 1; k < lines.size(); ++k) {
            auto& [l, tk] = lines[k];
            if (tk[0].s != "edge" || tk.size() != 4) parse_fail(l, tk[0].col, "expected 'edge <from> <to> <weight>'");
            int f = to_int(tk[1].s, l, tk[1].col), to = to_int(tk[2].s, l, tk[2].col), w = to_int(tk[3].s, l, tk[3].col);
            try {
                d.add_edge(f, to, w);
            } catch (const Error& e) {
                throw Error(e.code(), "line " + std::to_string(l) + ", column " + std::to_string(tk[0].col) + ": " + e.what());
            }
        }
        return d;
    }

    const int n = int(lines.size());
    ExchangeMatrix m{n, std::vector<int>(size_t(n) * n, 0)};
    for (int i = 0; i < n; ++i) {
        auto& [l, tk] = lines[i];
        if (int(tk.size()) != n) parse_fail(l, tk[0].col, "matrix row has " + std::to_string(tk.size()) + " entries, expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) m.at(i, j) = to_int(tk[j].s, l, tk[j].col);
    }
    return from_matrix(m, mode);
}

std::string serialize_diagram(const Diagram& d) {
    std::ostringstream out;
    out << "nodes " << d.size() << "\n";
    for (const Edge& e : d.edges()) out << "edge " << e.from << " " << e.to << " " << e.weight << "\n";
    return out.str();
}

namespace {

LabeledDigraph as_digraph(const Diagram& d) {
    LabeledDigraph g(d.size());
    for (const Edge& e : d.edges()) g.at(e.from, e.to) = e.weight;
    return g;
}

}  // namespace

Diagram relabel(const Diagram& d, const std::vector<int>& labeling) {
    Diagram out(d.size(), d.mode());
    for (const Edge& e : d.edges()) out.add_edge(labeling[e.from], labeling[e.to], e.weight);
    return out;
}

CanonicalForm canonical_form(const Diagram& d) {
    LabeledDigraph g = as_digraph(d);
    Canonical c = canonical_labeling(g);
    Diagram r = relabel(d, c.labeling);
    std::string key = std::to_string(d.size());
    for (const Edge& e : r.edges())
        key += ";" + std::to_string(e.from) + ">" + std::to_string(e.to) + ":" + std::to_string(e.weight);
    return {key, c.labeling};
}

std::vector<std::vector<int>> canonical_labelings(const Diagram& d) {
    return all_canonical_labelings(as_digraph(d));
}

}  // namespace blockdec
