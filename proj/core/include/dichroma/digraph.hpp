#ifndef DICHROMA_DIGRAPH_HPP
#define DICHROMA_DIGRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dichroma/bitset.hpp"
#include "dichroma/errors.hpp"

namespace dichroma {

using VertexId = int;

// Ordered set of vertex ids within a host digraph; helpers normalize and
// validate at API boundaries.
using VertexSet = std::vector<VertexId>;

// Simple finite digraph on dense ids 0..n-1: no self-loops, and for every
// pair {u,v} at most one of uv, vu. Adjacency is stored as one bit-row per
// direction so arc queries are O(1) and neighborhood intersections are
// O(n/64). A built Digraph is immutable in practice: construction is
// single-owner, all operations are pure.
class Digraph {
public:
    Digraph() = default;

    explicit Digraph(int n);

    static Digraph from_edge_list(int n, const std::vector<std::pair<int, int>>& arcs);

    int n() const { return n_; }
    int arc_count() const { return arc_count_; }

    // Enforces the simplicity invariant; throws VertexOutOfRange, SelfLoop,
    // or DuplicateOppositeArc. Adding an arc that is already present is a
    // no-op.
    void add_arc(int u, int v);

    bool has_arc(int u, int v) const { return out_[u].test(v); }
    bool adjacent(int u, int v) const { return out_[u].test(v) || in_[u].test(v); }

    const Bitset& out_bits(int v) const { return out_[v]; }
    const Bitset& in_bits(int v) const { return in_[v]; }

    // Neighbors in the underlying undirected graph.
    Bitset adjacency_bits(int v) const { return out_[v] | in_[v]; }

    int out_degree(int v) const { return out_[v].count(); }
    int in_degree(int v) const { return in_[v].count(); }
    int degree(int v) const { return out_degree(v) + in_degree(v); }

    VertexSet out_neighbors(int v) const { return out_[v].to_vector(); }
    VertexSet in_neighbors(int v) const { return in_[v].to_vector(); }

    // All arcs sorted by (u, v); the canonical order for file output.
    std::vector<std::pair<int, int>> arcs() const;

    bool operator==(const Digraph& o) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int arc_count_ = 0;
    std::vector<Bitset> out_;
    std::vector<Bitset> in_;
};

// Strongly connected components in topological order of the condensation.
struct Condensation {
    std::vector<VertexSet> components; // each sorted; indices are dag vertices
    std::vector<int> component_of;     // vertex -> component index
    Digraph dag;                       // acyclic; ids follow `components`
};

// --- set neighborhoods -----------------------------------------------------
// N+(S) = union of out-neighborhoods minus S, N-(S) likewise,
// N0(S) = common non-neighbors minus S.

VertexSet out_neighbors(const Digraph& d, const VertexSet& s);
VertexSet in_neighbors(const Digraph& d, const VertexSet& s);
VertexSet non_neighbors(const Digraph& d, const VertexSet& s);
VertexSet neighbors(const Digraph& d, const VertexSet& s); // N+(S) U N-(S)

Bitset out_neighbors_bits(const Digraph& d, const Bitset& s);
Bitset in_neighbors_bits(const Digraph& d, const Bitset& s);
Bitset neighbors_bits(const Digraph& d, const Bitset& s);
Bitset closed_neighbors_bits(const Digraph& d, const Bitset& s);

// --- induced subgraphs ------------------------------------------------------

// Induced subgraph plus the map from its dense ids back to host ids; needed
// to lift colorings and embeddings.
struct InducedSubdigraph {
    Digraph graph;
    VertexSet to_host; // sorted; to_host[i] is the host id of vertex i
};

InducedSubdigraph induced(const Digraph& d, const VertexSet& s);
InducedSubdigraph induced(const Digraph& d, const Bitset& s);

// --- structure ---------------------------------------------------------------

Condensation scc_condensation(const Digraph& d);

bool is_acyclic(const Digraph& d);
std::optional<std::vector<VertexId>> topological_order(const Digraph& d);

bool is_strongly_connected(const Digraph& d);

// Exact maximum clique of the underlying undirected graph
// (Bron-Kerbosch with pivoting on the bit-rows).
int underlying_clique_number(const Digraph& d);
VertexSet maximum_underlying_clique(const Digraph& d);
std::vector<VertexSet> all_maximum_underlying_cliques(const Digraph& d);

// --- join / union algebra ----------------------------------------------------
// Vertex numbering: operands keep their internal order, blocks are laid out
// left to right.

Digraph disjoint_union(const Digraph& a, const Digraph& b);
Digraph copies(int r, const Digraph& d);

// a => b: disjoint union plus all arcs from the a-side to the b-side.
Digraph join_forward(const Digraph& a, const Digraph& b);

// Cyclic pattern of complete one-way joins: parts 1->2, 2->3, 3->1.
Digraph triangle_join(const Digraph& a, const Digraph& b, const Digraph& c);

Digraph reverse(const Digraph& d);

// --- small helpers ------------------------------------------------------------

Digraph transitive_tournament(int k);
Digraph edgeless(int n);
Digraph cyclic_triangle();

// Sorts, dedups, and checks ids against d.n().
VertexSet normalize_vertex_set(const Digraph& d, VertexSet s);

// --- text formats --------------------------------------------------------------
// Edge-list: first line "n m", then m lines "u v" (arc u->v), 0-based;
// lines starting with '#' are comments.

Digraph parse_edge_list(std::istream& in);
Digraph parse_edge_list(const std::string& text);
Digraph load_edge_list(const std::string& path);

void write_edge_list(const Digraph& d, std::ostream& out);
std::string to_edge_list(const Digraph& d);

// DOT export with arc direction preserved.
std::string to_dot(const Digraph& d, const std::string& name = "D");

} // namespace dichroma

#endif
