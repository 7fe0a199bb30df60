#ifndef DICHROMA_PATTERNS_HPP
#define DICHROMA_PATTERNS_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dichroma/digraph.hpp"

namespace dichroma {

// --- pattern tags -------------------------------------------------------------
// Canonical vertex numbering per tag:
//   TTk            0..k-1 in transitive order
//   DirPath        path order 0 -> 1 -> ... -> m-1
//   OrientedPath   path order, one arrow per consecutive pair ("->" or "<-")
//   Star           center 0, then in-leaves, then out-leaves
//   Broom          handle v1 v2 v3 = 0 1 2, leaves 3..r+2
//   DeltaJoin      parts laid out in order
//   ForwardJoin    left part then right part
//   RK1Plus        r isolated vertices, then the inner pattern

struct TTkTag {
    int k;
};
struct DirPathTag {
    int m;
};
struct OrientedPathTag {
    std::string arrows; // e.g. "->-><-"
};
struct StarTag {
    int in_leaves;
    int out_leaves;
};

enum class EdgeDir { Forward, Backward };
enum class LeafDir { In, Out };

// Valid orientation of the r-broom: handle v1-v2-v3 with the two handle
// edges oriented by dir12/dir23 (Forward = toward v3), and all r leaf edges
// at v3 oriented uniformly.
struct BroomTag {
    int r;
    EdgeDir dir12;
    EdgeDir dir23;
    LeafDir leaf;
};

struct CyclicTriangleTag {};
struct InTriangleTag {};
struct OutTriangleTag {};

struct PatternTag;

struct RK1PlusTag {
    int r;
    std::shared_ptr<PatternTag> inner;
};
struct DeltaJoinTag {
    std::vector<std::shared_ptr<PatternTag>> parts; // exactly 3
};
struct ForwardJoinTag {
    std::shared_ptr<PatternTag> left;
    std::shared_ptr<PatternTag> right;
};
struct RawTag {};

struct PatternTag {
    std::variant<TTkTag, DirPathTag, OrientedPathTag, StarTag, BroomTag, CyclicTriangleTag,
                 InTriangleTag, OutTriangleTag, RK1PlusTag, DeltaJoinTag, ForwardJoinTag, RawTag>
        v;
};

struct Pattern {
    Digraph graph;
    PatternTag tag;
};

// Builds the canonical digraph for a tag; throws BadParameter on bad sizes
// and NotValidOrientation where orientations are constrained.
Pattern build(const PatternTag& tag);

// Stable string syntax used by the CLI:
//   tt:5   path:->-><-   star:in=2,out=3
//   broom:r=3,v12=fwd,v23=bwd,leaf=in
//   c3  it  ot
//   delta:1,1,tt:2        (a bare integer m means tt:m)
//   join:tt:2,c3          rk1p:2,(path:->->)
// Components containing top-level commas must be parenthesized.
Pattern parse_pattern(const std::string& text);
std::string format_pattern(const PatternTag& tag);

// Pattern with every arc reversed. Tags are mapped where the reversal is
// again canonical (paths, stars, brooms, triangles); otherwise Raw.
Pattern reverse(const Pattern& p);

// --- embeddings -----------------------------------------------------------------

// Injective map pattern vertex -> host vertex. Induced mode matches
// arc-for-arc and nonarc-for-nonarc; subgraph mode only preserves arcs.
struct Embedding {
    std::vector<VertexId> map;
    bool induced = true;
};

struct MatchOptions {
    uint64_t max_nodes = 200'000'000;
};

std::optional<Embedding> find_induced(const Digraph& d, const Pattern& p,
                                      const MatchOptions& opts = {});
std::optional<Embedding> find_subgraph(const Digraph& d, const Pattern& p,
                                       const MatchOptions& opts = {});

bool is_free(const Digraph& d, const Pattern& p, const MatchOptions& opts = {});

struct FreeOfAllResult {
    bool free = true;
    int violating_index = -1; // index into the pattern list
    std::optional<Embedding> witness;
};

FreeOfAllResult free_of_all(const Digraph& d, const std::vector<Pattern>& patterns,
                            const MatchOptions& opts = {});

bool check_embedding(const Digraph& d, const Pattern& p, const Embedding& e);

// --- hero grammar over tournaments ----------------------------------------------

// Derivation of a tournament as a hero: single vertex, a forward join of
// two heroes, or Delta(1, H1, m) / Delta(1, m, H1) with H1 a hero and a
// transitive part of size m >= 1.
struct HeroDerivation {
    enum class Rule { Single, Join, DeltaHeroFirst, DeltaHeroSecond };

    Rule rule = Rule::Single;
    VertexSet vertices; // host ids this node derives

    // Join
    VertexSet left, right;
    std::unique_ptr<HeroDerivation> left_child, right_child;

    // Delta forms: pivot singleton, hero part (child), transitive part
    VertexId pivot = -1;
    VertexSet hero_part, transitive_part;
    std::unique_ptr<HeroDerivation> hero_child;
};

// Returns a derivation when H is generated by the grammar, nullopt
// otherwise. Throws NotATournament if some pair is non-adjacent and
// BudgetExceeded for |V(H)| > 9.
std::optional<HeroDerivation> is_hero_in_tournaments(const Digraph& h);

// Re-checks every rule application in a derivation against the digraph.
bool verify_hero_derivation(const Digraph& h, const HeroDerivation& deriv);

// --- broom types ------------------------------------------------------------------
// Determined by the handle orientation alone; leaf direction does not
// matter. 1: v1->v2, v2->v3.  2: v1->v2, v3->v2.  3: v2->v1, v2->v3.
// 4: v2->v1, v3->v2.

int classify_broom_type(const Pattern& broom);

// Leaf count r of a broom pattern.
int broom_leaf_count(const Pattern& broom);

} // namespace dichroma

#endif
