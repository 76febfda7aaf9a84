#include "blockdec/decompose.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace blockdec {

namespace {

constexpr int kClash = 1000;

void add_block(SearchState& s, const BlockInstance& b, const BlockTemplate& t) {
    const int n = s.n;
    for (const TemplateEdge& e : t.edges) {
        int i = b.nodes[e.from], j = b.nodes[e.to];
        if (e.weight == 1) {
            ++s.unit[i * n + j];
            --s.unit[j * n + i];
            ++s.units[i * n + j];
            ++s.units[j * n + i];
        } else {
            s.heavy[i * n + j] = e.weight;
            s.heavy[j * n + i] = -e.weight;
            ++s.heavies[i * n + j];
            ++s.heavies[j * n + i];
        }
    }
    for (int l = 0; l < t.arity(); ++l) {
        int x = b.nodes[l];
        ++s.cover[x];
        if (!t.white[l] || s.cover[x] >= 2) s.sat[x] = 1;
    }
    s.placed.push_back(b);
}

int pair_value(int unit, int units, int heavy, int heavies) {
    if (heavies) return heavies > 1 || units ? kClash : heavy;
    if (unit == 0) return 0;
    if (unit == 1 || unit == -1) return unit;
    if (unit == 2 || unit == -2) return unit * 2;
    return kClash;
}

// canonical representative of the assignment modulo template automorphisms
BlockInstance normalize(const BlockInstance& b, const BlockTemplate& t) {
    BlockInstance best = b;
    for (const auto& p : t.automorphisms) {
        std::vector<int> c(b.nodes.size());
        for (size_t l = 0; l < c.size(); ++l) c[p[l]] = b.nodes[l];
        if (c < best.nodes) best.nodes = std::move(c);
    }
    return best;
}

}  // namespace

int Decomposer::value(const SearchState& s, int i, int j) {
    int k = i * s.n + j;
    return pair_value(s.unit[k], s.units[k], s.heavy[k], s.heavies[k]);
}

Decomposer::Decomposer(const Diagram& d, const BlockLibrary& lib)
    : d_(d), lib_(lib), n_(d.size()), tval_(size_t(n_) * n_, 0), nbr_(n_) {
    for (const Edge& e : d.edges()) {
        tval_[e.from * n_ + e.to] = e.weight;
        tval_[e.to * n_ + e.from] = -e.weight;
    }
    for (int v = 0; v < n_; ++v) nbr_[v] = d.neighbors(v);
    for (int ti = 0; ti < lib.size(); ++ti) {
        if (!lib.allowed(ti, d.mode())) continue;
        const BlockTemplate& t = lib.at(ti);
        for (int start = 0; start < t.arity(); ++start) {
            Order o{ti, start, {start}, {-1}};
            std::vector<char> seen(t.arity(), 0);
            seen[start] = 1;
            for (size_t q = 0; q < o.labels.size(); ++q) {
                int a = o.labels[q];
                for (int b = 0; b < t.arity(); ++b) {
                    if (seen[b] || !(t.arrow(a, b) || t.arrow(b, a))) continue;
                    seen[b] = 1;
                    o.labels.push_back(b);
                    o.anchor.push_back(a);
                }
            }
            if (int(o.labels.size()) != t.arity())
                throw Error(Errc::DataFileCorrupt, "block " + t.tag + " is not connected");
            orders_.push_back(std::move(o));
        }
    }
}

SearchState Decomposer::initial() const {
    SearchState s;
    s.n = n_;
    size_t nn = size_t(n_) * n_;
    s.unit.assign(nn, 0);
    s.units.assign(nn, 0);
    s.heavy.assign(nn, 0);
    s.heavies.assign(nn, 0);
    s.cover.assign(n_, 0);
    s.sat.assign(n_, 0);
    s.closed.assign(n_, 0);
    return s;
}

int Decomposer::pivot(const SearchState& s) const {
    for (int v = 0; v < n_; ++v)
        if (!s.closed[v]) return v;
    return -1;
}

bool Decomposer::closable(const SearchState& s, int v) const {
    if (s.cover[v] == 0) return false;
    for (int u = 0; u < n_; ++u)
        if (u != v && value(s, v, u) != target(v, u)) return false;
    return true;
}

void Decomposer::candidates(const SearchState& s, int v, std::vector<BlockInstance>& out) const {
    for (const Order& o : orders_) {
        const BlockTemplate& t = lib_.at(o.tmpl);
        if (!t.white[o.start] && s.cover[v] > 0) continue;
        std::vector<int> a(t.arity(), -1);
        a[o.start] = v;
        std::vector<int> cand;
        auto rec = [&](auto&& self, size_t k) -> void {
            if (k == o.labels.size()) {
                out.push_back({o.tmpl, a});
                return;
            }
            int l = o.labels[k], m = o.anchor[k], x = a[m];
            int te = t.arrow(m, l) ? t.arrow(m, l) : -t.arrow(l, m);
            bool strict = !t.white[m] || !t.white[l] || (te != 1 && te != -1);
            std::vector<int> ys;
            if (strict) {
                for (int y : nbr_[x])
                    if (target(x, y) == te) ys.push_back(y);
            } else {
                ys = nbr_[x];
                for (int y = 0; y < n_; ++y) {
                    if (y == x || target(x, y) != 0) continue;
                    if (s.units[x * n_ + y] > 0 || (s.cover[x] == 0 && s.cover[y] == 0)) ys.push_back(y);
                }
                std::sort(ys.begin(), ys.end());
            }
            for (int y : ys) {
                if (s.closed[y] || std::find(a.begin(), a.end(), y) != a.end()) continue;
                if (t.white[l] ? s.sat[y] : s.cover[y] > 0) continue;
                a[l] = y;
                self(self, k + 1);
                a[l] = -1;
            }
        };
        rec(rec, 1);
    }
}

bool Decomposer::apply(const SearchState& s, const BlockInstance& b, SearchState& next) const {
    const BlockTemplate& t = lib_.at(b.tmpl);
    next = s;
    add_block(next, b, t);
    const int k = t.arity();
    for (int p = 0; p < k; ++p) {
        for (int q = p + 1; q < k; ++q) {
            int x = b.nodes[p], y = b.nodes[q];
            int want = target(x, y);
            int have = value(next, x, y);
            if (have == want) continue;
            if (next.sat[x] || next.sat[y]) return false;
            int idx = x * n_ + y;
            if (next.heavies[idx]) return false;
            int u = next.unit[idx], us = next.units[idx] + 1;
            if (pair_value(u + 1, us, 0, 0) != want && pair_value(u - 1, us, 0, 0) != want) return false;
        }
    }
    for (int p = 0; p < k; ++p) {
        int x = b.nodes[p];
        if (!next.sat[x]) continue;
        for (int z = 0; z < n_; ++z)
            if (z != x && value(next, x, z) != target(x, z)) return false;
    }
    return true;
}

std::vector<SearchState> Decomposer::search_step(const SearchState& s) const {
    std::vector<SearchState> out;
    int v = pivot(s);
    if (v < 0) return out;
    if (closable(s, v)) {
        SearchState next = s;
        next.closed[v] = 1;
        next.last_pivot = -1;
        next.last_key.clear();
        out.push_back(std::move(next));
    }
    if (s.sat[v] || int(s.placed.size()) >= n_) return out;
    std::vector<BlockInstance> cand;
    candidates(s, v, cand);
    std::map<std::string, BlockInstance> uniq;
    for (auto& b : cand) uniq.emplace(block_key(b, lib_), b);
    for (auto& [key, b] : uniq) {
        if (s.last_pivot == v && key < s.last_key) continue;
        SearchState next;
        if (!apply(s, b, next)) continue;
        next.last_pivot = v;
        next.last_key = key;
        out.push_back(std::move(next));
    }
    return out;
}

namespace {

struct Collector {
    std::optional<size_t> limit;
    std::map<std::string, GluePlan> found;
    bool exceeded = false;

    void add(std::string key, GluePlan plan) {
        found.emplace(std::move(key), std::move(plan));
        if (limit && found.size() > *limit) {
            found.erase(std::prev(found.end()));
            exceeded = true;
        }
    }
};

}  // namespace

Enumeration Decomposer::enumerate(std::optional<size_t> limit, int threads) const {
    auto finish = [&](const SearchState& s) {
        GluePlan p{d_.mode(), n_, {}};
        for (const auto& b : s.placed) p.blocks.push_back(normalize(b, lib_.at(b.tmpl)));
        std::sort(p.blocks.begin(), p.blocks.end(), [&](const BlockInstance& x, const BlockInstance& y) {
            return block_key(x, lib_) < block_key(y, lib_);
        });
        GlueResult r = glue(p, lib_);
        if (!(r.diagram == d_)) throw std::logic_error("decomposer produced a plan that does not glue back");
        return p;
    };
    auto dfs = [&](auto&& self, const SearchState& s, Collector& c) -> void {
        if (is_success(s)) {
            GluePlan p = finish(s);
            std::string key = plan_key(p, lib_);
            c.add(std::move(key), std::move(p));
            return;
        }
        for (const SearchState& t : search_step(s)) self(self, t, c);
    };

    Collector root{limit, {}};
    std::vector<SearchState> frontier{initial()};
    if (threads > 1) {
        // widen breadth-first so there is work for every thread
        for (int round = 0; round < 8 && frontier.size() < size_t(threads) * 4; ++round) {
            std::vector<SearchState> next;
            bool grew = false;
            for (const auto& s : frontier) {
                if (is_success(s)) {
                    GluePlan p = finish(s);
                    std::string key = plan_key(p, lib_);
                    root.add(std::move(key), std::move(p));
                    continue;
                }
                for (auto& t : search_step(s)) next.push_back(std::move(t));
                grew = true;
            }
            frontier = std::move(next);
            if (!grew) break;
        }
    }
    std::vector<Collector> parts(frontier.size(), Collector{limit, {}});
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (size_t i; (i = cursor++) < frontier.size();) dfs(dfs, frontier[i], parts[i]);
    };
    int nt = std::max(1, std::min<int>(threads, int(frontier.size())));
    std::vector<std::thread> pool;
    for (int i = 1; i < nt; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (auto& part : parts) {
        root.exceeded = root.exceeded || part.exceeded;
        for (auto& [k, p] : part.found) root.add(k, std::move(p));
    }
    Enumeration e;
    e.limit_exceeded = root.exceeded;
    for (auto& [k, p] : root.found) e.decompositions.push_back({std::move(p), k});
    return e;
}

std::optional<Decomposition> Decomposer::first() const {
    Enumeration e = enumerate(1);
    if (e.decompositions.empty()) return std::nullopt;
    return e.decompositions.front();
}

std::optional<Decomposition> is_decomposable(const Diagram& d, const BlockLibrary& lib) {
    return Decomposer(d, lib).first();
}

Enumeration enumerate_decompositions(const Diagram& d, std::optional<size_t> limit, int threads, const BlockLibrary& lib) {
    return Decomposer(d, lib).enumerate(limit, threads);
}

}  // namespace blockdec
