#ifndef DICHROMA_DICOLOR_HPP
#define DICHROMA_DICOLOR_HPP

#include <cstdint>
#include <optional>

#include "dichroma/digraph.hpp"

namespace dichroma {

// Vertex -> color map whose classes each induce an acyclic subdigraph.
struct Dicoloring {
    std::vector<int> colors; // one entry per vertex, values in [0, k)
    int k = 0;               // number of colors used
};

// True iff every color class induces an acyclic subdigraph. Throws
// PartialColoring when the map is not total on V(D) or a color is out of
// [0, k).
bool verify_dicoloring(const Digraph& d, const Dicoloring& f);

struct SolveOptions {
    uint64_t max_nodes = 50'000'000;  // search nodes before BudgetExceeded
    int max_subset_dp_vertices = 22;  // longest-path DP cutoff on cyclic inputs
};

struct ChiResult {
    int value = 0;
    Dicoloring coloring; // witness; always passes verify_dicoloring
    uint64_t nodes_explored = 0;
};

// Exact dichromatic number with witness. Iterative deepening on k, vertices
// assigned in reverse degeneracy order, incremental per-class cycle checks,
// first vertex's color fixed. Deterministic for fixed input. Throws
// BudgetExceeded carrying the best bounds found so far.
ChiResult dichromatic_number(const Digraph& d, const SolveOptions& opts = {});

// chi_dir of D[S].
ChiResult dichromatic_number_of_subset(const Digraph& d, const VertexSet& s,
                                       const SolveOptions& opts = {});

// Decision variant: is there a dicoloring with at most k colors?
bool dichromatic_number_at_most(const Digraph& d, int k, const SolveOptions& opts = {});

// Number of vertices on a longest directed (not necessarily induced) path.
// chi(underlying) <= returned value. Linear DP on acyclic inputs; exact
// subset DP otherwise, limited to opts.max_subset_dp_vertices.
int gallai_roy_bound(const Digraph& d, const SolveOptions& opts = {});

// Exact chromatic number of the underlying undirected graph
// (branch and bound seeded with a clique lower bound).
int chromatic_number_undirected(const Digraph& d, const SolveOptions& opts = {});

// Every out-neighborhood (resp. in-neighborhood) has chi_dir <= k.
bool is_k_local(const Digraph& d, int k, const SolveOptions& opts = {});
bool is_k_colocal(const Digraph& d, int k, const SolveOptions& opts = {});

// Exact maximum stable set size of the underlying undirected graph.
int independence_number(const Digraph& d);
VertexSet maximum_independent_set(const Digraph& d);

} // namespace dichroma

#endif
