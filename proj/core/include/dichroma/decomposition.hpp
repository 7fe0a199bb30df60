#ifndef DICHROMA_DECOMPOSITION_HPP
#define DICHROMA_DECOMPOSITION_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "dichroma/dicolor.hpp"
#include "dichroma/digraph.hpp"
#include "dichroma/patterns.hpp"

namespace dichroma {

// --- nice sets ---------------------------------------------------------------

// Nonempty S bipartitioned so every vertex of S1 has at most k in-neighbors
// outside S, and every vertex of S2 at most k out-neighbors outside S.
struct NiceSetCertificate {
    VertexSet S, S1, S2;
    int k = 0;
};

// Throws BadPartition when S1, S2 do not partition S.
bool verify_nice_set(const Digraph& d, const NiceSetCertificate& cert);

// Certificate plus an explicit dicoloring of D[S]; the coloring is the
// proof that chi_dir(S) <= c.
struct ColoredNiceSet {
    NiceSetCertificate cert;
    std::map<VertexId, int> s_colors; // host ids -> colors in [0, c)
};

// Called with the host digraph and the (host-id) vertex set still to be
// colored; must return a nice set of the induced subgraph. The contract is
// hereditary: the oracle is consulted on every残 suffix of the recursion.
using NiceSetOracle =
    std::function<ColoredNiceSet(const Digraph& d, const VertexSet& remaining)>;

// Product-palette recursion over oracle-provided nice sets: colors D with
// at most 2c(k+1) colors. Every oracle answer is verified; an invalid one
// raises OracleFailure. Internal palette accounting violations raise
// ColorBudgetBug (unreachable with an honest oracle).
Dicoloring color_via_nice_sets(const Digraph& d, const NiceSetOracle& oracle, int c, int k);

// --- path-minimizing closed tournament ------------------------------------------

// A maximum-size tournament K plus, when K is not strongly connected, a
// shortest directed path from a sink vertex of K back to a source vertex,
// interior disjoint from K; |K| + |interior| minimized over all choices.
struct Pmct {
    VertexSet K;              // sorted
    std::vector<VertexId> P;  // full path including its K endpoints; empty
                              // when K is strongly connected
    VertexSet C() const;      // K union P, sorted

    std::vector<VertexId> interior() const; // P minus endpoints
};

// Throws NotStronglyConnected when d is not strongly connected.
Pmct find_pmct(const Digraph& d);

// Source/sink vertices of a tournament: members of the first/last strongly
// connected component of its condensation.
VertexSet tournament_source_vertices(const Digraph& d, const VertexSet& k);
VertexSet tournament_sink_vertices(const Digraph& d, const VertexSet& k);

// X: vertices outside C with both an in- and an out-neighbor in C;
// Z: the rest of N(C); Y: N(X) minus N[C].
struct NeighborhoodSplit {
    VertexSet X, Z, Y;
};

NeighborhoodSplit broom_neighborhood_split(const Digraph& d, const Pmct& c);

// Erdos-Szekeres upper bound C(a+b-2, a-1) on the graph Ramsey number
// R(a, b), saturating instead of overflowing.
long long ramsey_upper(int a, int b);

// Certificate that N[C u X] is k-nice, with k = ramsey_upper(max(r, s),
// omega+1) for the leaf counts r, s of the two brooms. Throws
// NicenessViolated when some vertex exceeds the bound on both sides.
NiceSetCertificate verify_ncx_nice(const Digraph& d, const Pmct& c, const Pattern& b,
                                   const Pattern& b_prime);

// --- path-neighborhood partitions -------------------------------------------------

// Sides by the first/last path neighbor of each vertex of N(path) minus
// `excluded`: a_minus/a_plus split by whether the minimum-index neighbor
// points at the vertex or away; b_minus/b_plus the same for the maximum
// index.
struct FirstLastPartition {
    VertexSet a_minus, a_plus, b_minus, b_plus;
};

FirstLastPartition partition_first_last(const Digraph& d, const std::vector<VertexId>& path,
                                        const VertexSet& excluded);

enum class LayerMode { FirstIn, FirstOut };

// L_i = vertices of `candidates` whose first path in-neighbor (FirstIn) or
// out-neighbor (FirstOut) is path[i]. Throws UncoveredVertex when some
// candidate has no qualifying neighbor. Layers are indexed by path
// position, 0-based.
std::vector<VertexSet> layer_decomposition(const Digraph& d, const std::vector<VertexId>& path,
                                           const VertexSet& candidates, LayerMode mode);

// classes[i] = union of layers with index congruent to i (mod modulus).
std::vector<VertexSet> residue_classes(const std::vector<VertexSet>& layers, int modulus);

// --- the broom-free coloring pipeline ----------------------------------------------

struct BroomFreeOptions {
    uint64_t match_budget = 200'000'000;
};

struct BroomFreeResult {
    Dicoloring coloring;
    long long bound = 0;       // palette bound for omega(D); saturating
    std::string trace_json;    // per-level decomposition record
};

// Constructive coloring of a digraph free of two valid opposing broom
// orientations; colors <= 2(omega(gamma+1)+gamma(6k+25)+2)(k+1) with gamma
// the bound one clique level down. Throws FreenessViolated (with witness)
// when d contains either broom, NotValidOrientation when the brooms are not
// valid opposing orientations. tt_cap (t) is recorded in the trace; the
// recursion is driven by the actual clique number.
BroomFreeResult dicolor_broom_free(const Digraph& d, const Pattern& b, const Pattern& b_prime,
                                   int tt_cap, const BroomFreeOptions& opts = {});

// The recursive palette bound b(omega) for leaf counts r, s; saturating.
long long broom_free_bound(int omega, int r, int s);

// --- bag chains and zones ------------------------------------------------------------

struct BagChain {
    std::vector<VertexSet> bags;
    int c = 0;
    int beta = 0;
};

enum class BagMode { Exact, AtLeast };

struct BagChainCheck {
    bool ok = true;
    std::string reason;
};

// Bags disjoint, chi_dir of every bag equal to beta (or >= beta in AtLeast
// mode), and for every v in B_i: chi_dir(N+(v) & B_{i-1}) <= c and
// chi_dir(N-(v) & B_{i+1}) <= c.
BagChainCheck verify_bag_chain(const Digraph& d, const BagChain& chain,
                               BagMode mode = BagMode::Exact, const SolveOptions& opts = {});

// Greedily appends maximal bags satisfying the chain conditions until
// stuck. Heuristic: no optimality claim, only the verifier is contractual.
BagChain extend_bag_chain_greedy(const Digraph& d, int c, int beta, const VertexSet& seed_bag,
                                 const SolveOptions& opts = {});

// zones[v] = largest bag index i (1-based) with chi_dir(N-(v) & B_i) > c,
// 0 when none; -1 for vertices inside the chain.
std::vector<int> zone_partition(const Digraph& d, const BagChain& chain, int c,
                                const SolveOptions& opts = {});

// --- layered partition checks ----------------------------------------------------------

struct PartitionCheckResult {
    bool hypotheses_ok = true;
    std::string failing; // which hypothesis failed, empty when ok
    bool conclusion_checked = false;
    bool conclusion_ok = false;
    int conclusion_bound = 0;
};

// Hypotheses: every part has chi_dir <= k, and every back arc (u in X_j,
// v in X_i, i < j) has chi_dir(X_{i+1} u ... u X_j) <= k. When they hold
// and the instance is desk-scale, checks chi_dir(D) <= 2k exactly.
PartitionCheckResult layered_partition_check(const Digraph& d,
                                             const std::vector<VertexSet>& parts, int k,
                                             const SolveOptions& opts = {});

// Hypotheses: per-part chi_dir <= m_prime, per-vertex forward out- and
// backward in-neighborhood chi_dir <= m_prime, and chi_dir(N0(v)) <= m for
// every vertex. Conclusion checked: chi_dir(D) <= 6(m+m_prime)+2.
PartitionCheckResult partition_dichi_check(const Digraph& d,
                                           const std::vector<VertexSet>& parts, int m,
                                           int m_prime, const SolveOptions& opts = {});

// Measured m' = max over the three bullet quantities; m = max chi_dir(N0(v)).
std::pair<int, int> measure_partition_constants(const Digraph& d,
                                                const std::vector<VertexSet>& parts,
                                                const SolveOptions& opts = {});

// --- domination helpers -------------------------------------------------------------------

// Inclusion-minimal B subset of S such that every vertex of S minus B has an
// in-neighbor in B.
VertexSet minimal_dominating_set(const Digraph& d, const VertexSet& s);

bool dominates(const Digraph& d, const VertexSet& dominators, const VertexSet& target);

// Vertices of S with no in-neighbor inside S; requires D[S] acyclic
// (NotAcyclic otherwise). The result is always stable; on induced-P3-free
// inputs it also dominates the rest of S.
VertexSet source_layer(const Digraph& d, const VertexSet& s);

} // namespace dichroma

#endif
