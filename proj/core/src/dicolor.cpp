#include "dichroma/dicolor.hpp"

#include <algorithm>
#include <numeric>

namespace dichroma {

bool verify_dicoloring(const Digraph& d, const Dicoloring& f) {
    if (int(f.colors.size()) != d.n())
        throw PartialColoring("coloring covers " + std::to_string(f.colors.size()) +
                              " of " + std::to_string(d.n()) + " vertices");
    for (int c : f.colors)
        if (c < 0 || c >= f.k)
            throw PartialColoring("color " + std::to_string(c) + " outside [0, " +
                                  std::to_string(f.k) + ")");
    for (int c = 0; c < f.k; ++c) {
        VertexSet cls;
        for (int v = 0; v < d.n(); ++v)
            if (f.colors[v] == c) cls.push_back(v);
        if (!is_acyclic(induced(d, cls).graph)) return false;
    }
    return true;
}

namespace {

// Reverse degeneracy order of the underlying graph: repeatedly peel a
// minimum-degree vertex, then color the peeled sequence back to front.
std::vector<int> assignment_order(const Digraph& d) {
    int n = d.n();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = d.degree(v);
    std::vector<int> peel;
    peel.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        peel.push_back(best);
        d.adjacency_bits(best).for_each([&](int w) {
            if (!removed[w]) --deg[w];
        });
    }
    std::reverse(peel.begin(), peel.end());
    return peel;
}

struct ChiDirSearch {
    const Digraph& d;
    const std::vector<int>& order;
    int k;
    uint64_t budget;
    uint64_t nodes = 0;
    std::vector<int> color;                 // by vertex, -1 unassigned
    std::vector<VertexSet> classes;         // members per color

    ChiDirSearch(const Digraph& dd, const std::vector<int>& ord, int kk, uint64_t b)
        : d(dd), order(ord), k(kk), budget(b), color(dd.n(), -1), classes(kk) {}

    // Would adding v to class c close a monochromatic cycle? DFS within the
    // class from v's out-neighbors looking for v.
    bool creates_cycle(int v, int c) const {
        std::vector<int> stack;
        std::vector<bool> seen(d.n(), false);
        bool found = false;
        d.out_bits(v).for_each([&](int w) {
            if (color[w] == c) {
                seen[w] = true;
                stack.push_back(w);
            }
        });
        while (!stack.empty() && !found) {
            int u = stack.back();
            stack.pop_back();
            d.out_bits(u).for_each([&](int w) {
                if (w == v) found = true;
                else if (color[w] == c && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            });
        }
        return found;
    }

    bool assign(size_t idx, int max_used) {
        if (idx == order.size()) return true;
        if (++nodes > budget)
            throw BudgetExceeded("dichromatic number search exceeded node budget", 0, 0);
        int v = order[idx];
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (creates_cycle(v, c)) continue;
            color[v] = c;
            classes[c].push_back(v);
            if (assign(idx + 1, std::max(max_used, c))) return true;
            classes[c].pop_back();
            color[v] = -1;
        }
        return false;
    }
};

Dicoloring greedy_dicoloring(const Digraph& d, const std::vector<int>& order) {
    Dicoloring f;
    f.colors.assign(d.n(), -1);
    int used = 0;
    std::vector<VertexSet> classes;
    for (int v : order) {
        int c = 0;
        for (; c < used; ++c) {
            VertexSet cls = classes[c];
            cls.push_back(v);
            if (is_acyclic(induced(d, cls).graph)) break;
        }
        if (c == used) {
            classes.push_back({});
            ++used;
        }
        classes[c].push_back(v);
        f.colors[v] = c;
    }
    f.k = used;
    return f;
}

} // namespace

bool dichromatic_number_at_most(const Digraph& d, int k, const SolveOptions& opts) {
    if (d.n() == 0) return true;
    if (k <= 0) return false;
    if (k == 1) return is_acyclic(d);
    auto order = assignment_order(d);
    ChiDirSearch s(d, order, k, opts.max_nodes);
    try {
        return s.assign(0, -1);
    } catch (BudgetExceeded&) {
        throw BudgetExceeded("dichromatic_number_at_most(" + std::to_string(k) +
                                 ") exceeded node budget",
                             2, d.n() == 0 ? 0 : (d.n() + 1) / 2);
    }
}

ChiResult dichromatic_number(const Digraph& d, const SolveOptions& opts) {
    ChiResult res;
    if (d.n() == 0) {
        res.coloring.k = 0;
        return res;
    }
    if (is_acyclic(d)) {
        res.value = 1;
        res.coloring.colors.assign(d.n(), 0);
        res.coloring.k = 1;
        return res;
    }
    auto order = assignment_order(d);
    Dicoloring ub = greedy_dicoloring(d, order);
    uint64_t total_nodes = 0;
    for (int k = 2; k < ub.k; ++k) {
        ChiDirSearch s(d, order, k, opts.max_nodes - std::min(opts.max_nodes, total_nodes));
        bool ok = false;
        try {
            ok = s.assign(0, -1);
        } catch (BudgetExceeded&) {
            throw BudgetExceeded("dichromatic number search exceeded node budget", k, ub.k);
        }
        total_nodes += s.nodes;
        if (ok) {
            res.value = k;
            res.coloring.colors = s.color;
            res.coloring.k = k;
            res.nodes_explored = total_nodes;
            return res;
        }
    }
    res.value = ub.k;
    res.coloring = ub;
    res.nodes_explored = total_nodes;
    return res;
}

ChiResult dichromatic_number_of_subset(const Digraph& d, const VertexSet& s,
                                       const SolveOptions& opts) {
    return dichromatic_number(induced(d, s).graph, opts);
}

// --- longest directed path -----------------------------------------------------

namespace {

int longest_path_dag(const Digraph& d) {
    auto topo = topological_order(d);
    std::vector<int> len(d.n(), 1);
    int best = d.n() == 0 ? 0 : 1;
    for (int v : *topo) {
        d.out_bits(v).for_each([&](int w) { len[w] = std::max(len[w], len[v] + 1); });
    }
    for (int v = 0; v < d.n(); ++v) best = std::max(best, len[v]);
    return best;
}

// Greedy deterministic DFS extension; a lower bound only.
int longest_path_greedy(const Digraph& d) {
    int best = d.n() > 0 ? 1 : 0;
    for (int s = 0; s < d.n(); ++s) {
        Bitset used(d.n());
        used.set(s);
        int v = s, len = 1;
        while (true) {
            int next = d.out_bits(v).and_not(used).first();
            if (next < 0) break;
            used.set(next);
            v = next;
            ++len;
        }
        best = std::max(best, len);
    }
    return best;
}

} // namespace

int gallai_roy_bound(const Digraph& d, const SolveOptions& opts) {
    if (d.n() == 0) return 0;
    if (is_acyclic(d)) return longest_path_dag(d);
    int n = d.n();
    if (n > opts.max_subset_dp_vertices)
        throw BudgetExceeded("longest directed path needs subset DP on " + std::to_string(n) +
                                 " vertices (limit " +
                                 std::to_string(opts.max_subset_dp_vertices) + ")",
                             longest_path_greedy(d), n);
    // ends[mask] = bitmask of vertices at which a path covering exactly
    // `mask` can end.
    std::vector<uint32_t> ends(size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) ends[uint32_t(1) << v] = uint32_t(1) << v;
    int best = 1;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        uint32_t e = ends[mask];
        if (!e) continue;
        best = std::max(best, __builtin_popcount(mask));
        while (e) {
            int v = __builtin_ctz(e);
            e &= e - 1;
            d.out_bits(v).for_each([&](int w) {
                uint32_t wb = uint32_t(1) << w;
                if (!(mask & wb)) ends[mask | wb] |= wb;
            });
        }
    }
    return best;
}

// --- undirected chromatic number -------------------------------------------------

namespace {

struct ChromaticSearch {
    const std::vector<Bitset>& adj;
    const std::vector<int>& order;
    int k;
    uint64_t budget;
    uint64_t nodes = 0;
    std::vector<int> color;

    ChromaticSearch(const std::vector<Bitset>& a, const std::vector<int>& ord, int kk, uint64_t b)
        : adj(a), order(ord), k(kk), budget(b), color(a.size(), -1) {}

    bool assign(size_t idx, int max_used) {
        if (idx == order.size()) return true;
        if (++nodes > budget) throw BudgetExceeded("chromatic number search budget", 0, 0);
        int v = order[idx];
        std::vector<bool> taken(k, false);
        adj[v].for_each([&](int w) {
            if (color[w] >= 0) taken[color[w]] = true;
        });
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (taken[c]) continue;
            color[v] = c;
            if (assign(idx + 1, std::max(max_used, c))) return true;
            color[v] = -1;
        }
        return false;
    }
};

} // namespace

int chromatic_number_undirected(const Digraph& d, const SolveOptions& opts) {
    int n = d.n();
    if (n == 0) return 0;
    std::vector<Bitset> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = d.adjacency_bits(v);
    auto order = assignment_order(d);
    // greedy upper bound
    std::vector<int> greedy(n, -1);
    int ub = 0;
    for (int v : order) {
        std::vector<bool> taken(n + 1, false);
        adj[v].for_each([&](int w) {
            if (greedy[w] >= 0) taken[greedy[w]] = true;
        });
        int c = 0;
        while (taken[c]) ++c;
        greedy[v] = c;
        ub = std::max(ub, c + 1);
    }
    int lb = underlying_clique_number(d);
    uint64_t spent = 0;
    for (int k = lb; k < ub; ++k) {
        ChromaticSearch s(adj, order, k, opts.max_nodes - std::min(opts.max_nodes, spent));
        bool ok = false;
        try {
            ok = s.assign(0, -1);
        } catch (BudgetExceeded&) {
            throw BudgetExceeded("chromatic number search exceeded node budget", k, ub);
        }
        spent += s.nodes;
        if (ok) return k;
    }
    return ub;
}

bool is_k_local(const Digraph& d, int k, const SolveOptions& opts) {
    for (int v = 0; v < d.n(); ++v) {
        auto sub = induced(d, d.out_bits(v));
        if (!dichromatic_number_at_most(sub.graph, k, opts)) return false;
    }
    return true;
}

bool is_k_colocal(const Digraph& d, int k, const SolveOptions& opts) {
    for (int v = 0; v < d.n(); ++v) {
        auto sub = induced(d, d.in_bits(v));
        if (!dichromatic_number_at_most(sub.graph, k, opts)) return false;
    }
    return true;
}

VertexSet maximum_independent_set(const Digraph& d) {
    // maximum clique of the complement of the underlying graph
    Digraph comp(d.n());
    for (int u = 0; u < d.n(); ++u)
        for (int v = u + 1; v < d.n(); ++v)
            if (!d.adjacent(u, v)) comp.add_arc(u, v);
    return maximum_underlying_clique(comp);
}

int independence_number(const Digraph& d) {
    return int(maximum_independent_set(d).size());
}

} // namespace dichroma
