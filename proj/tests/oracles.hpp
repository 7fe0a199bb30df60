#ifndef DICHROMA_TEST_ORACLES_HPP
#define DICHROMA_TEST_ORACLES_HPP

// Brute-force reference implementations used only by the test suites. They
// deliberately avoid the library's search kernels: adjacency is a plain
// matrix, reachability is a boolean closure, and enumeration is exhaustive.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "dichroma/digraph.hpp"

namespace oracles {

struct Matrix {
    int n = 0;
    std::vector<std::vector<bool>> arc;

    explicit Matrix(const dichroma::Digraph& d) : n(d.n()) {
        arc.assign(n, std::vector<bool>(n, false));
        for (auto [u, v] : d.arcs()) arc[u][v] = true;
    }
};

// Acyclicity of the induced subset by repeated sink removal.
inline bool acyclic_subset(const Matrix& m, const std::vector<int>& verts) {
    std::vector<int> alive = verts;
    while (!alive.empty()) {
        bool removed = false;
        for (size_t i = 0; i < alive.size(); ++i) {
            bool has_out = false;
            for (int w : alive)
                if (w != alive[i] && m.arc[alive[i]][w]) has_out = true;
            if (!has_out) {
                alive.erase(alive.begin() + i);
                removed = true;
                break;
            }
        }
        if (!removed) return false;
    }
    return true;
}

// Minimum number of acyclic classes over all set partitions (restricted
// growth string enumeration).
inline int bell_chi_dir(const dichroma::Digraph& d) {
    int n = d.n();
    if (n == 0) return 0;
    Matrix m(d);
    std::vector<int> rgs(n, 0);
    int best = n + 1;
    // enumerate restricted growth strings
    std::vector<int> maxes(n, 0);
    while (true) {
        int classes = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (classes < best) {
            bool ok = true;
            for (int c = 0; c < classes && ok; ++c) {
                std::vector<int> cls;
                for (int v = 0; v < n; ++v)
                    if (rgs[v] == c) cls.push_back(v);
                ok = acyclic_subset(m, cls);
            }
            if (ok) best = classes;
        }
        // next restricted growth string
        int i = n - 1;
        for (; i > 0; --i) {
            int cap = 0;
            for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
            if (rgs[i] <= cap) {
                ++rgs[i];
                for (int j = i + 1; j < n; ++j) rgs[j] = 0;
                break;
            }
            rgs[i] = 0;
        }
        if (i == 0) break;
    }
    return best;
}

// All-injections induced / subgraph search, no pruning.
inline bool naive_has_embedding(const dichroma::Digraph& host, const dichroma::Digraph& pat,
                                bool induced_mode) {
    int nh = host.n(), np = pat.n();
    if (np > nh) return false;
    Matrix hm(host), pm(pat);
    std::vector<int> map(np, -1);
    std::vector<bool> used(nh, false);

    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == np) return true;
        for (int v = 0; v < nh; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                bool p_fwd = pm.arc[j][i], p_bwd = pm.arc[i][j];
                bool h_fwd = hm.arc[map[j]][v], h_bwd = hm.arc[v][map[j]];
                if (p_fwd && !h_fwd) ok = false;
                if (p_bwd && !h_bwd) ok = false;
                if (induced_mode && !p_fwd && !p_bwd && (h_fwd || h_bwd)) ok = false;
            }
            if (!ok) continue;
            map[i] = v;
            used[v] = true;
            if (rec(i + 1)) return true;
            used[v] = false;
            map[i] = -1;
        }
        return false;
    };
    return rec(0);
}

// Mutual-reachability classes via boolean closure.
inline std::vector<std::vector<int>> scc_classes(const dichroma::Digraph& d) {
    int n = d.n();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v) reach[v][v] = true;
    for (auto [u, v] : d.arcs()) reach[u][v] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (reach[i][k])
                for (int j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < n; ++v) {
        if (cls[v] >= 0) continue;
        std::vector<int> comp;
        for (int u = v; u < n; ++u)
            if (cls[u] < 0 && reach[v][u] && reach[u][v]) {
                cls[u] = int(comps.size());
                comp.push_back(u);
            }
        comps.push_back(comp);
    }
    return comps;
}

// Longest directed path by exhaustive DFS (vertex count).
inline int longest_path_vertices(const dichroma::Digraph& d) {
    int n = d.n();
    if (n == 0) return 0;
    Matrix m(d);
    int best = 1;
    std::vector<bool> used(n, false);
    std::function<void(int, int)> rec = [&](int v, int len) {
        best = std::max(best, len);
        for (int w = 0; w < n; ++w)
            if (!used[w] && m.arc[v][w]) {
                used[w] = true;
                rec(w, len + 1);
                used[w] = false;
            }
    };
    for (int v = 0; v < n; ++v) {
        used[v] = true;
        rec(v, 1);
        used[v] = false;
    }
    return best;
}

// Exhaustive proper-coloring test of the underlying graph.
inline int chromatic_undirected(const dichroma::Digraph& d) {
    int n = d.n();
    if (n == 0) return 0;
    Matrix m(d);
    auto adjacent = [&](int u, int v) { return m.arc[u][v] || m.arc[v][u]; };
    for (int k = 1; k <= n; ++k) {
        std::vector<int> color(n, -1);
        std::function<bool(int)> rec = [&](int v) -> bool {
            if (v == n) return true;
            for (int c = 0; c < k; ++c) {
                bool ok = true;
                for (int u = 0; u < v && ok; ++u)
                    if (adjacent(u, v) && color[u] == c) ok = false;
                if (!ok) continue;
                color[v] = c;
                if (rec(v + 1)) return true;
                color[v] = -1;
            }
            return false;
        };
        if (rec(0)) return k;
    }
    return n;
}

// Maximum clique of the underlying graph by subset enumeration (n <= 20).
inline int clique_number(const dichroma::Digraph& d) {
    int n = d.n();
    Matrix m(d);
    auto adjacent = [&](int u, int v) { return m.arc[u][v] || m.arc[v][u]; };
    int best = 0;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask & (uint32_t(1) << v)) verts.push_back(v);
        if (int(verts.size()) <= best) continue;
        bool ok = true;
        for (size_t i = 0; i < verts.size() && ok; ++i)
            for (size_t j = i + 1; j < verts.size() && ok; ++j)
                if (!adjacent(verts[i], verts[j])) ok = false;
        if (ok) best = int(verts.size());
    }
    return best;
}

// Maximum stable set size by subset enumeration.
inline int independence_number(const dichroma::Digraph& d) {
    int n = d.n();
    Matrix m(d);
    auto adjacent = [&](int u, int v) { return m.arc[u][v] || m.arc[v][u]; };
    int best = 0;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask & (uint32_t(1) << v)) verts.push_back(v);
        if (int(verts.size()) <= best) continue;
        bool ok = true;
        for (size_t i = 0; i < verts.size() && ok; ++i)
            for (size_t j = i + 1; j < verts.size() && ok; ++j)
                if (adjacent(verts[i], verts[j])) ok = false;
        if (ok) best = int(verts.size());
    }
    return best;
}

// Minimum |K| + |interior| over all maximum tournaments K and all simple
// sink->source return paths; nullopt when no clique admits a closure.
inline std::optional<int> brute_pmct_size(const dichroma::Digraph& d) {
    int n = d.n();
    Matrix m(d);
    auto adjacent = [&](int u, int v) { return m.arc[u][v] || m.arc[v][u]; };
    int omega = clique_number(d);

    std::optional<int> best;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        if (__builtin_popcount(mask) != omega) continue;
        std::vector<int> k;
        for (int v = 0; v < n; ++v)
            if (mask & (uint32_t(1) << v)) k.push_back(v);
        bool clique = true;
        for (size_t i = 0; i < k.size() && clique; ++i)
            for (size_t j = i + 1; j < k.size() && clique; ++j)
                if (!adjacent(k[i], k[j])) clique = false;
        if (!clique) continue;

        auto comps = scc_classes(dichroma::induced(d, k).graph);
        if (comps.size() == 1) {
            best = best ? std::min(*best, omega) : omega;
            continue;
        }
        // sources/sinks of the tournament via in/out degrees between comps:
        // topological order by component reachability
        auto sub = dichroma::induced(d, k);
        Matrix sm(sub.graph);
        // component order: comp A before comp B if some arc A->B
        std::vector<int> cls(sub.graph.n());
        for (size_t ci = 0; ci < comps.size(); ++ci)
            for (int v : comps[ci]) cls[v] = int(ci);
        std::vector<int> order(comps.size());
        for (size_t ci = 0; ci < comps.size(); ++ci) order[ci] = int(ci);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (a == b) return false;
            return bool(sm.arc[comps[a][0]][comps[b][0]]);
        });
        std::vector<int> sources, sinks;
        for (int v : comps[order.front()]) sources.push_back(sub.to_host[v]);
        for (int v : comps[order.back()]) sinks.push_back(sub.to_host[v]);

        // all simple paths sink -> source avoiding K in the interior
        std::vector<bool> used(n, false);
        for (int v : k) used[v] = true;
        int best_interior = -1;
        std::function<void(int, int)> rec = [&](int v, int len) {
            if (best_interior >= 0 && len >= best_interior) return;
            for (int s2 : sources)
                if (m.arc[v][s2]) {
                    best_interior = len;
                    return;
                }
            for (int w = 0; w < n; ++w)
                if (!used[w] && m.arc[v][w]) {
                    used[w] = true;
                    rec(w, len + 1);
                    used[w] = false;
                }
        };
        for (int s1 : sinks) rec(s1, 0);
        if (best_interior >= 0) {
            int total = omega + best_interior;
            best = best ? std::min(*best, total) : total;
        }
    }
    return best;
}

} // namespace oracles

#endif
