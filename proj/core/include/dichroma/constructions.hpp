#ifndef DICHROMA_CONSTRUCTIONS_HPP
#define DICHROMA_CONSTRUCTIONS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "dichroma/dicolor.hpp"
#include "dichroma/digraph.hpp"

namespace dichroma {

// Strictly increasing k-tuple over [n], 1-based.
struct ShiftVertex {
    std::vector<int> tuple;
};

enum class EdgeClass { X, Y, Z1, Z2 };

const char* edge_class_name(EdgeClass c);
std::optional<EdgeClass> edge_class_from_name(const std::string& s);

enum class ConstructionKind { Shift, F7, F5 };

// Total order on tuple vertices used for the Z arcs. Lex is the tuple
// enumeration order; Seeded shuffles it deterministically.
struct TupleOrder {
    enum class Kind { Lex, Seeded, Explicit } kind = Kind::Lex;
    uint64_t seed = 0;
    std::vector<int> explicit_rank; // rank per vertex id (Explicit only)

    static TupleOrder lex() { return {}; }
    static TupleOrder seeded(uint64_t s) { return {Kind::Seeded, s, {}}; }
    static TupleOrder explicit_order(std::vector<int> rank) {
        return {Kind::Explicit, 0, std::move(rank)};
    }
};

// A shift-tuple digraph together with per-vertex tuple labels, a per-arc
// class in {X, Y, Z1, Z2}, and the parameters it was generated from. The
// four classes partition the arc set.
struct LabeledConstruction {
    ConstructionKind kind = ConstructionKind::Shift;
    int k = 0;
    int n = 0;
    Digraph digraph;
    std::vector<ShiftVertex> labels;
    std::vector<int> order_rank; // Z arcs go from smaller to larger rank
    std::string order_descr;     // "lex" or "random:<seed>" or "explicit"

    // arcs in canonical (u, v) order with their classes
    std::vector<std::pair<int, int>> arc_list;
    std::vector<EdgeClass> arc_classes; // parallel to arc_list

    EdgeClass class_of(int u, int v) const;
    int count_class(EdgeClass c) const;
};

// Number of vertices C(n, k); BadParameter when it exceeds `cap`.
long long shift_vertex_count(int k, int n, long long cap = 2'000'000);

// The k-tuple shift graph: vertices are increasing k-tuples over [n],
// adjacency when one tuple is the one-position shift of the other. Returned
// with the natural acyclic orientation (low tuple -> shifted tuple); the
// underlying undirected graph is the shift graph itself.
Digraph shift_graph(int k, int n);

// Same digraph, with labels and every arc classed X.
LabeledConstruction shift_digraph(int k, int n);

// 7-tuple construction: shift arcs X, back-arcs Y from tuples whose first
// four entries equal another tuple's last four, and two tournament families
// Z1/Z2 on shared length-4 prefixes/suffixes. n >= 8.
LabeledConstruction build_f7(int n, const TupleOrder& order = TupleOrder::lex());

// 5-tuple analogue with length-3 prefixes/suffixes. n >= 6.
LabeledConstruction build_f5(int n, const TupleOrder& order = TupleOrder::lex());

// --- structural verification -----------------------------------------------------

struct TournamentPartitionResult {
    bool ok = false;
    std::vector<VertexSet> partition;           // present when ok
    std::optional<std::pair<int, int>> stable_pair; // a non-adjacent pair inside a group
    int parts_needed = 0;
};

// Partitions N(v) into tournaments following the construction's grouping
// (shift-in / shift-out / prefix / suffix groups merged along Y-complete
// pairs); at most 4 groups for the 7-tuple family, 3 for the 5-tuple one.
// Fails when more than max_parts groups are needed or a group has a
// non-adjacent pair.
TournamentPartitionResult verify_neighborhood_tournament_partition(
    const LabeledConstruction& c, int v, int max_parts);

// Exhaustive directed-triangle scan; nullopt when none exists.
std::optional<std::array<int, 3>> verify_no_cyclic_triangle(const LabeledConstruction& c);

struct TriangleProfileResult {
    bool ok = true;
    std::array<int, 3> witness{};          // u -> v -> w -> u
    std::array<EdgeClass, 3> classes{};
};

// Every directed triangle must have class multiset {X, X, Y}.
TriangleProfileResult verify_triangle_profile_f5(const LabeledConstruction& c);

// ceil(chi(shift graph) / divisor), divisor 3 for 7-tuples and 2 for
// 5-tuples; a certified lower bound on chi_dir of the construction.
int dichromatic_lower_bound_via_gallai_roy(const LabeledConstruction& c,
                                           const SolveOptions& opts = {});

// --- file round-trip ----------------------------------------------------------------
// Edge-list output carries "#dichroma ..." parameter comments and a
// "#class u v X|Y|Z1|Z2" block; byte-identical for identical parameters.

void write_labeled(const LabeledConstruction& c, std::ostream& out);
std::string to_labeled_text(const LabeledConstruction& c);
LabeledConstruction parse_labeled(std::istream& in);
LabeledConstruction parse_labeled_text(const std::string& text);

} // namespace dichroma

#endif
