#include "blockdec/canon.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace blockdec {

namespace {

std::vector<int> compress(const std::vector<int>& v) {
    std::vector<int> s(v);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<int> out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = int(std::lower_bound(s.begin(), s.end(), v[i]) - s.begin());
    return out;
}

int count_cells(const std::vector<int>& cell) {
    int m = -1;
    for (int c : cell) m = std::max(m, c);
    return m + 1;
}

// Colour refinement to an equitable partition.  Cells stay ordered by their
// previous rank, so the result depends only on the isomorphism type.
std::vector<int> refine(const LabeledDigraph& g, std::vector<int> cell) {
    const int n = g.n;
    cell = compress(cell);
    int ncell = count_cells(cell);
    using Sig = std::vector<std::pair<int, int>>;
    while (true) {
        std::vector<Sig> sig(n);
        for (int v = 0; v < n; ++v) {
            Sig& s = sig[v];
            s.push_back({cell[v], -1});
            Sig out, in;
            for (int u = 0; u < n; ++u) {
                if (g.at(v, u)) out.push_back({g.at(v, u), cell[u]});
                if (g.at(u, v)) in.push_back({g.at(u, v), cell[u]});
            }
            std::sort(out.begin(), out.end());
            std::sort(in.begin(), in.end());
            s.insert(s.end(), out.begin(), out.end());
            s.push_back({-2, -2});
            s.insert(s.end(), in.begin(), in.end());
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        std::vector<int> next(n);
        int rank = -1;
        for (int k = 0; k < n; ++k) {
            if (k == 0 || sig[order[k]] != sig[order[k - 1]]) ++rank;
            next[order[k]] = rank;
        }
        cell = std::move(next);
        if (rank + 1 == ncell) break;
        ncell = rank + 1;
    }
    return cell;
}

struct Search {
    const LabeledDigraph& g;
    bool have = false;
    std::vector<int> best_cert, best_lab, best_inv;
    std::vector<std::vector<int>> autos;

    explicit Search(const LabeledDigraph& gr) : g(gr) {}

    int find(std::vector<int>& p, int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }

    void leaf(const std::vector<int>& lab) {
        std::vector<int> cert = apply_labeling(g, lab);
        if (!have || cert < best_cert) {
            have = true;
            best_cert = std::move(cert);
            best_lab = lab;
            best_inv.assign(g.n, 0);
            for (int v = 0; v < g.n; ++v) best_inv[lab[v]] = v;
        } else if (cert == best_cert) {
            std::vector<int> gamma(g.n);
            bool ident = true;
            for (int v = 0; v < g.n; ++v) {
                gamma[v] = best_inv[lab[v]];
                ident = ident && gamma[v] == v;
            }
            if (!ident) autos.push_back(std::move(gamma));
        }
    }

    void dfs(std::vector<int> cell, std::vector<int>& path) {
        cell = refine(g, std::move(cell));
        const int n = g.n;
        std::vector<int> size(n, 0);
        for (int c : cell) ++size[c];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (size[c] > 1) { target = c; break; }
        if (target < 0) { leaf(cell); return; }

        std::vector<int> explored;
        for (int v = 0; v < n; ++v) {
            if (cell[v] != target) continue;
            if (!explored.empty()) {
                std::vector<int> uf(n);
                std::iota(uf.begin(), uf.end(), 0);
                for (const auto& a : autos) {
                    bool fixes = true;
                    for (int p : path) fixes = fixes && a[p] == p;
                    if (!fixes) continue;
                    for (int x = 0; x < n; ++x) uf[find(uf, x)] = find(uf, a[x]);
                }
                bool skip = false;
                for (int w : explored) skip = skip || find(uf, w) == find(uf, v);
                if (skip) continue;
            }
            explored.push_back(v);
            std::vector<int> next(n);
            for (int u = 0; u < n; ++u) next[u] = 2 * cell[u] + (cell[u] == target && u != v ? 1 : 0);
            path.push_back(v);
            dfs(std::move(next), path);
            path.pop_back();
        }
    }
};

std::vector<std::vector<int>> automorphisms(const LabeledDigraph& g) {
    const int n = g.n;
    std::vector<int> cls = refine(g, g.color);
    std::vector<std::vector<int>> out;
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) { out.push_back(img); return; }
        for (int u = 0; u < n; ++u) {
            if (used[u] || cls[u] != cls[v]) continue;
            bool ok = g.at(v, v) == g.at(u, u);
            for (int w = 0; ok && w < v; ++w)
                ok = g.at(v, w) == g.at(u, img[w]) && g.at(w, v) == g.at(img[w], u);
            if (!ok) continue;
            img[v] = u;
            used[u] = 1;
            self(self, v + 1);
            used[u] = 0;
            img[v] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

std::vector<int> apply_labeling(const LabeledDigraph& g, const std::vector<int>& lab) {
    const int n = g.n;
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[lab[v]] = v;
    std::vector<int> cert;
    cert.reserve(n + n * n);
    for (int k = 0; k < n; ++k) cert.push_back(g.color[inv[k]]);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) cert.push_back(g.at(inv[a], inv[b]));
    return cert;
}

Canonical canonical_labeling(const LabeledDigraph& g) {
    if (g.n == 0) return {};
    Search s(g);
    std::vector<int> path;
    s.dfs(g.color, path);
    return {s.best_cert, s.best_lab};
}

std::vector<std::vector<int>> all_canonical_labelings(const LabeledDigraph& g) {
    Canonical c = canonical_labeling(g);
    std::vector<std::vector<int>> out;
    for (const auto& a : automorphisms(g)) {
        std::vector<int> p(g.n);
        for (int v = 0; v < g.n; ++v) p[v] = c.labeling[a[v]];
        out.push_back(std::move(p));
    }
    if (out.empty()) out.push_back(c.labeling);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace blockdec
