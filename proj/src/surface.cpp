#include "blockdec/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace blockdec {

bool same_surface(const SurfaceInvariants& a, const SurfaceInvariants& b) {
    return a.genus == b.genus && a.boundary == b.boundary;
}

Triangulation assemble(const GluePlan& plan, const BlockLibrary& lib) {
    validate_plan(plan, lib);
    const int n = plan.node_count;
    Triangulation t;
    t.node_count = n;
    std::vector<int> shared_arc(n, -1), cover(n, 0);
    std::vector<char> white_once(n, 0);
    for (const BlockInstance& b : plan.blocks) {
        const BlockTemplate& bt = lib.at(b.tmpl);
        const Piece& p = bt.piece;
        std::vector<int> per_label(bt.arity(), 0);
        for (int lab : p.arc_label) ++per_label[lab];
        std::vector<int> gid(p.arcs.size());
        std::map<int, std::vector<int>> folded;
        for (size_t a = 0; a < p.arcs.size(); ++a) {
            int lab = p.arc_label[a], v = b.nodes[lab];
            if (per_label[lab] == 1) {
                if (shared_arc[v] < 0) {
                    shared_arc[v] = t.arc_count();
                    t.arc_node.push_back(v);
                }
                gid[a] = shared_arc[v];
            } else {
                gid[a] = t.arc_count();
                t.arc_node.push_back(v);
                folded[v].push_back(gid[a]);
            }
        }
        for (auto& [v, arcs] : folded)
            for (size_t k = 1; k < arcs.size(); ++k) t.conjugate_pairs.push_back({arcs[0], arcs[k]});
        for (const auto& tri : p.tris) {
            std::array<int, 3> g{};
            for (int k = 0; k < 3; ++k) g[k] = tri[k] < 0 ? -1 : gid[tri[k]];
            t.tris.push_back(g);
        }
        for (int l = 0; l < bt.arity(); ++l) {
            int v = b.nodes[l];
            ++cover[v];
            white_once[v] = bt.white[l];
        }
    }
    // every outlet left unglued is closed off by a triangle with two boundary sides
    for (int v = 0; v < n; ++v)
        if (cover[v] == 1 && white_once[v]) t.tris.push_back({shared_arc[v], -1, -1});

    std::vector<int> uses(t.arc_count(), 0);
    for (const auto& tri : t.tris)
        for (int s : tri)
            if (s >= 0) ++uses[s];
    for (int a = 0; a < t.arc_count(); ++a)
        if (uses[a] != 2)
            throw Error(Errc::NonSurfaceComplex, "arc for node " + std::to_string(t.arc_node[a]) + " bounds " +
                                                     std::to_string(uses[a]) + " triangle sides");
    return t;
}

Triangulation piece_triangulation(int tmpl, const BlockLibrary& lib) {
    const BlockTemplate& bt = lib.at(tmpl);
    GluePlan p{Mode::S, bt.arity(), {}};
    BlockInstance b{tmpl, std::vector<int>(bt.arity())};
    std::iota(b.nodes.begin(), b.nodes.end(), 0);
    p.blocks.push_back(b);
    return assemble(p, lib);
}

namespace {

int find(std::vector<int>& uf, int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
}

void unite(std::vector<int>& uf, int a, int b) { uf[find(uf, a)] = find(uf, b); }

bool self_folded(const std::array<int, 3>& tri) {
    return (tri[0] >= 0 && (tri[0] == tri[1] || tri[0] == tri[2])) || (tri[1] >= 0 && tri[1] == tri[2]);
}

}  // namespace

SurfaceInvariants surface_invariants(const Triangulation& t) {
    const int nt = int(t.tris.size());
    // corner 3*i+k sits between side k and side k+1; side k runs from corner k-1 to corner k
    std::vector<int> uf(3 * nt);
    std::iota(uf.begin(), uf.end(), 0);
    std::vector<std::vector<std::pair<int, int>>> occ(t.arc_count());
    int segments = 0;
    for (int i = 0; i < nt; ++i)
        for (int k = 0; k < 3; ++k) {
            if (t.tris[i][k] >= 0) occ[t.tris[i][k]].push_back({i, k});
            else ++segments;
        }
    for (int a = 0; a < t.arc_count(); ++a) {
        if (occ[a].size() != 2) throw Error(Errc::NonSurfaceComplex, "arc without two sides");
        auto [t1, k1] = occ[a][0];
        auto [t2, k2] = occ[a][1];
        unite(uf, 3 * t1 + (k1 + 2) % 3, 3 * t2 + k2);
        unite(uf, 3 * t1 + k1, 3 * t2 + (k2 + 2) % 3);
    }
    std::map<int, int> vid;
    for (int c = 0; c < 3 * nt; ++c) vid.emplace(find(uf, c), int(vid.size()));
    const int V = int(vid.size());

    std::vector<int> ends(V, 0), buf(V);
    std::iota(buf.begin(), buf.end(), 0);
    for (int i = 0; i < nt; ++i)
        for (int k = 0; k < 3; ++k) {
            if (t.tris[i][k] >= 0) continue;
            int a = vid[find(uf, 3 * i + (k + 2) % 3)], b = vid[find(uf, 3 * i + k)];
            ++ends[a];
            ++ends[b];
            unite(buf, a, b);
        }
    std::map<int, int> marked;
    int on_boundary = 0;
    for (int v = 0; v < V; ++v) {
        if (!ends[v]) continue;
        if (ends[v] != 2) throw Error(Errc::NonSurfaceComplex, "boundary vertex is not a half-disk");
        ++on_boundary;
        ++marked[find(buf, v)];
    }

    SurfaceInvariants s;
    s.triangles = nt;
    s.arcs = t.arc_count();
    s.chi = V - (t.arc_count() + segments) + nt;
    s.boundary = int(marked.size());
    s.punctures = V - on_boundary;
    for (auto& [root, m] : marked) s.boundary_marked.push_back(m);
    std::sort(s.boundary_marked.begin(), s.boundary_marked.end());
    int twice_genus = 2 - s.boundary - s.chi;
    if (twice_genus < 0 || twice_genus % 2) throw Error(Errc::NonSurfaceComplex, "Euler characteristic is inconsistent");
    s.genus = twice_genus / 2;
    return s;
}

ExchangeMatrix signed_adjacency_matrix(const Triangulation& t) {
    const int m = t.arc_count();
    std::vector<int> pi(m);
    std::iota(pi.begin(), pi.end(), 0);
    for (const auto& tri : t.tris) {
        if (!self_folded(tri)) continue;
        // (l, r, r) up to rotation: r is folded, l the enclosing loop
        for (int k = 0; k < 3; ++k)
            if (tri[k] >= 0 && tri[k] == tri[(k + 1) % 3]) pi[tri[k]] = tri[(k + 2) % 3];
    }
    ExchangeMatrix b{m, std::vector<int>(size_t(m) * m, 0)};
    for (const auto& tri : t.tris) {
        if (self_folded(tri)) continue;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                for (int k = 0; k < 3; ++k) {
                    if (tri[k] == pi[i] && tri[(k + 1) % 3] == pi[j]) ++b.at(i, j);
                    if (tri[k] == pi[j] && tri[(k + 1) % 3] == pi[i]) --b.at(i, j);
                }
            }
    }
    return b;
}

ExchangeMatrix fold_to_nodes(const Triangulation& t, const ExchangeMatrix& arcs) {
    const int n = t.node_count;
    std::vector<int> rep(n, -1);
    for (int a = 0; a < t.arc_count(); ++a)
        if (rep[t.arc_node[a]] < 0) rep[t.arc_node[a]] = a;
    ExchangeMatrix b{n, std::vector<int>(size_t(n) * n, 0)};
    for (int j = 0; j < t.arc_count(); ++j) {
        int J = t.arc_node[j];
        for (int I = 0; I < n; ++I)
            if (rep[I] >= 0 && I != J) b.at(I, J) += arcs.at(rep[I], j);
    }
    return b;
}

}  // namespace blockdec
