#include "dichroma/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace dichroma {

Digraph::Digraph(int n) : n_(n) {
    if (n < 0) throw BadParameter("vertex count must be non-negative");
    out_.assign(n, Bitset(n));
    in_.assign(n, Bitset(n));
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw VertexOutOfRange("vertex " + std::to_string(v) + " not in [0, " +
                               std::to_string(n_) + ")");
}

void Digraph::add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
    if (out_[v].test(u))
        throw DuplicateOppositeArc("both directions requested for {" +
                                   std::to_string(u) + ", " + std::to_string(v) + "}");
    if (out_[u].test(v)) return;
    out_[u].set(v);
    in_[v].set(u);
    ++arc_count_;
}

Digraph Digraph::from_edge_list(int n, const std::vector<std::pair<int, int>>& arcs) {
    Digraph d(n);
    for (auto [u, v] : arcs) d.add_arc(u, v);
    return d;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> a;
    a.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        out_[u].for_each([&](int v) { a.emplace_back(u, v); });
    return a;
}

bool Digraph::operator==(const Digraph& o) const {
    return n_ == o.n_ && out_ == o.out_;
}

// --- set neighborhoods -----------------------------------------------------

Bitset out_neighbors_bits(const Digraph& d, const Bitset& s) {
    Bitset r(d.n());
    s.for_each([&](int v) { r |= d.out_bits(v); });
    r.subtract(s);
    return r;
}

Bitset in_neighbors_bits(const Digraph& d, const Bitset& s) {
    Bitset r(d.n());
    s.for_each([&](int v) { r |= d.in_bits(v); });
    r.subtract(s);
    return r;
}

Bitset neighbors_bits(const Digraph& d, const Bitset& s) {
    Bitset r(d.n());
    s.for_each([&](int v) {
        r |= d.out_bits(v);
        r |= d.in_bits(v);
    });
    r.subtract(s);
    return r;
}

Bitset closed_neighbors_bits(const Digraph& d, const Bitset& s) {
    Bitset r = neighbors_bits(d, s);
    r |= s;
    return r;
}

VertexSet out_neighbors(const Digraph& d, const VertexSet& s) {
    return out_neighbors_bits(d, Bitset::of(d.n(), normalize_vertex_set(d, s))).to_vector();
}

VertexSet in_neighbors(const Digraph& d, const VertexSet& s) {
    return in_neighbors_bits(d, Bitset::of(d.n(), normalize_vertex_set(d, s))).to_vector();
}

VertexSet non_neighbors(const Digraph& d, const VertexSet& s) {
    VertexSet sn = normalize_vertex_set(d, s);
    Bitset sb = Bitset::of(d.n(), sn);
    // intersection of per-vertex non-neighborhoods, minus S
    Bitset r = sb.complement();
    for (int v : sn) {
        Bitset non = (d.out_bits(v) | d.in_bits(v)).complement();
        non.reset(v);
        r &= non;
    }
    r.subtract(sb);
    return r.to_vector();
}

VertexSet neighbors(const Digraph& d, const VertexSet& s) {
    return neighbors_bits(d, Bitset::of(d.n(), normalize_vertex_set(d, s))).to_vector();
}

// --- induced ----------------------------------------------------------------

InducedSubdigraph induced(const Digraph& d, const VertexSet& s) {
    VertexSet host = normalize_vertex_set(d, s);
    std::vector<int> local(d.n(), -1);
    for (size_t i = 0; i < host.size(); ++i) local[host[i]] = int(i);
    Digraph g(int(host.size()));
    for (size_t i = 0; i < host.size(); ++i) {
        d.out_bits(host[i]).for_each([&](int w) {
            if (local[w] >= 0) g.add_arc(int(i), local[w]);
        });
    }
    return {std::move(g), std::move(host)};
}

InducedSubdigraph induced(const Digraph& d, const Bitset& s) {
    return induced(d, s.to_vector());
}

// --- SCC / order ------------------------------------------------------------

namespace {

// Iterative Tarjan; component ids assigned in reverse topological order.
struct TarjanState {
    const Digraph& d;
    std::vector<int> index, low, comp;
    std::vector<int> stack;
    std::vector<bool> on_stack;
    int next_index = 0, next_comp = 0;

    explicit TarjanState(const Digraph& dd)
        : d(dd), index(dd.n(), -1), low(dd.n(), 0), comp(dd.n(), -1), on_stack(dd.n(), false) {}

    void run(int root) {
        struct Frame {
            int v;
            int neighbor_from;
        };
        std::vector<Frame> frames{{root, 0}};
        while (!frames.empty()) {
            auto& f = frames.back();
            int v = f.v;
            if (f.neighbor_from == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            int w = d.out_bits(v).next_at(f.neighbor_from);
            if (w >= 0) {
                f.neighbor_from = w + 1;
                if (index[w] < 0) {
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                while (true) {
                    int u = stack.back();
                    stack.pop_back();
                    on_stack[u] = false;
                    comp[u] = next_comp;
                    if (u == v) break;
                }
                ++next_comp;
            }
            frames.pop_back();
            if (!frames.empty()) {
                int parent = frames.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
};

} // namespace

Condensation scc_condensation(const Digraph& d) {
    TarjanState t(d);
    for (int v = 0; v < d.n(); ++v)
        if (t.index[v] < 0) t.run(v);

    int m = t.next_comp;
    // Tarjan numbers components in reverse topological order; flip it.
    Condensation c;
    c.components.assign(m, {});
    c.component_of.assign(d.n(), -1);
    for (int v = 0; v < d.n(); ++v) {
        int id = m - 1 - t.comp[v];
        c.component_of[v] = id;
        c.components[id].push_back(v);
    }
    for (auto& comp : c.components) std::sort(comp.begin(), comp.end());
    c.dag = Digraph(m);
    for (int u = 0; u < d.n(); ++u) {
        d.out_bits(u).for_each([&](int v) {
            int cu = c.component_of[u], cv = c.component_of[v];
            if (cu != cv && !c.dag.has_arc(cu, cv)) c.dag.add_arc(cu, cv);
        });
    }
    return c;
}

std::optional<std::vector<VertexId>> topological_order(const Digraph& d) {
    std::vector<int> indeg(d.n());
    for (int v = 0; v < d.n(); ++v) indeg[v] = d.in_degree(v);
    // Kahn with min-id tie-break for determinism.
    std::vector<VertexId> order;
    order.reserve(d.n());
    Bitset ready(d.n());
    for (int v = 0; v < d.n(); ++v)
        if (indeg[v] == 0) ready.set(v);
    while (true) {
        int v = ready.first();
        if (v < 0) break;
        ready.reset(v);
        order.push_back(v);
        d.out_bits(v).for_each([&](int w) {
            if (--indeg[w] == 0) ready.set(w);
        });
    }
    if (int(order.size()) != d.n()) return std::nullopt;
    return order;
}

bool is_acyclic(const Digraph& d) { return topological_order(d).has_value(); }

bool is_strongly_connected(const Digraph& d) {
    if (d.n() == 0) return false;
    return scc_condensation(d).components.size() == 1;
}

// --- maximum clique ----------------------------------------------------------

namespace {

struct CliqueSearch {
    const std::vector<Bitset>& adj;
    int n;
    VertexSet best;
    std::vector<VertexSet>* collect_all = nullptr; // cliques of size `target`
    int target = 0;

    void expand(VertexSet& r, Bitset p, Bitset x) {
        if (p.none() && x.none()) {
            if (collect_all) {
                if (int(r.size()) == target) collect_all->push_back(r);
            } else if (r.size() > best.size()) {
                best = r;
            }
            return;
        }
        if (!collect_all && int(r.size()) + p.count() <= int(best.size())) return;
        if (collect_all && int(r.size()) + p.count() < target) return;
        // pivot: vertex of P|X covering most of P
        int pivot = -1, pivot_cover = -1;
        Bitset px = p | x;
        px.for_each([&](int u) {
            int cover = (p & adj[u]).count();
            if (cover > pivot_cover) {
                pivot_cover = cover;
                pivot = u;
            }
        });
        Bitset cand = pivot >= 0 ? p.and_not(adj[pivot]) : p;
        cand.for_each([&](int v) {
            r.push_back(v);
            expand(r, p & adj[v], x & adj[v]);
            r.pop_back();
            p.reset(v);
            x.set(v);
        });
    }
};

std::vector<Bitset> underlying_adjacency(const Digraph& d) {
    std::vector<Bitset> adj(d.n());
    for (int v = 0; v < d.n(); ++v) adj[v] = d.adjacency_bits(v);
    return adj;
}

} // namespace

VertexSet maximum_underlying_clique(const Digraph& d) {
    if (d.n() == 0) return {};
    auto adj = underlying_adjacency(d);
    CliqueSearch cs{adj, d.n(), {}, nullptr, 0};
    VertexSet r;
    Bitset p(d.n());
    for (int v = 0; v < d.n(); ++v) p.set(v);
    cs.expand(r, p, Bitset(d.n()));
    std::sort(cs.best.begin(), cs.best.end());
    return cs.best;
}

int underlying_clique_number(const Digraph& d) {
    return int(maximum_underlying_clique(d).size());
}

std::vector<VertexSet> all_maximum_underlying_cliques(const Digraph& d) {
    if (d.n() == 0) return {};
    int omega = underlying_clique_number(d);
    auto adj = underlying_adjacency(d);
    std::vector<VertexSet> found;
    CliqueSearch cs{adj, d.n(), {}, &found, omega};
    VertexSet r;
    Bitset p(d.n());
    for (int v = 0; v < d.n(); ++v) p.set(v);
    cs.expand(r, p, Bitset(d.n()));
    for (auto& c : found) std::sort(c.begin(), c.end());
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

// --- algebra ------------------------------------------------------------------

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
    Digraph d(a.n() + b.n());
    for (auto [u, v] : a.arcs()) d.add_arc(u, v);
    for (auto [u, v] : b.arcs()) d.add_arc(a.n() + u, a.n() + v);
    return d;
}

Digraph copies(int r, const Digraph& d) {
    if (r < 0) throw BadParameter("copies: r must be >= 0");
    Digraph out(r * d.n());
    for (int i = 0; i < r; ++i)
        for (auto [u, v] : d.arcs()) out.add_arc(i * d.n() + u, i * d.n() + v);
    return out;
}

Digraph join_forward(const Digraph& a, const Digraph& b) {
    Digraph d = disjoint_union(a, b);
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) d.add_arc(u, a.n() + v);
    return d;
}

Digraph triangle_join(const Digraph& a, const Digraph& b, const Digraph& c) {
    Digraph d = disjoint_union(disjoint_union(a, b), c);
    int ob = a.n(), oc = a.n() + b.n();
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) d.add_arc(u, ob + v);
    for (int u = 0; u < b.n(); ++u)
        for (int v = 0; v < c.n(); ++v) d.add_arc(ob + u, oc + v);
    for (int u = 0; u < c.n(); ++u)
        for (int v = 0; v < a.n(); ++v) d.add_arc(oc + u, v);
    return d;
}

Digraph reverse(const Digraph& d) {
    Digraph r(d.n());
    for (auto [u, v] : d.arcs()) r.add_arc(v, u);
    return r;
}

Digraph transitive_tournament(int k) {
    if (k < 0) throw BadParameter("transitive_tournament: k must be >= 0");
    Digraph d(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) d.add_arc(i, j);
    return d;
}

Digraph edgeless(int n) { return Digraph(n); }

Digraph cyclic_triangle() {
    return Digraph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
}

VertexSet normalize_vertex_set(const Digraph& d, VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 0 || v >= d.n())
            throw VertexOutOfRange("vertex " + std::to_string(v) + " not in host digraph");
    return s;
}

// --- text formats ---------------------------------------------------------------

Digraph parse_edge_list(std::istream& in) {
    std::string line;
    long long n = -1, m = -1;
    long long seen = 0;
    Digraph d;
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("edge list: expected header 'n m', got: " + line);
            d = Digraph(int(n));
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError("edge list: malformed arc line: " + line);
        std::string rest;
        if (ls >> rest) throw ParseError("edge list: trailing tokens on arc line: " + line);
        d.add_arc(int(u), int(v));
        ++seen;
    }
    if (n < 0) throw ParseError("edge list: missing 'n m' header");
    if (seen != m)
        throw ParseError("edge list: header promised " + std::to_string(m) + " arcs, found " +
                         std::to_string(seen));
    return d;
}

Digraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Digraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_edge_list(in);
}

void write_edge_list(const Digraph& d, std::ostream& out) {
    out << d.n() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Digraph& d) {
    std::ostringstream out;
    write_edge_list(d, out);
    return out.str();
}

std::string to_dot(const Digraph& d, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (int v = 0; v < d.n(); ++v)
        if (d.degree(v) == 0) out << "  " << v << ";\n";
    for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace dichroma
