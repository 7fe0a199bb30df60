#include "dichroma/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace dichroma {

const char* edge_class_name(EdgeClass c) {
    switch (c) {
    case EdgeClass::X: return "X";
    case EdgeClass::Y: return "Y";
    case EdgeClass::Z1: return "Z1";
    case EdgeClass::Z2: return "Z2";
    }
    return "?";
}

std::optional<EdgeClass> edge_class_from_name(const std::string& s) {
    if (s == "X") return EdgeClass::X;
    if (s == "Y") return EdgeClass::Y;
    if (s == "Z1") return EdgeClass::Z1;
    if (s == "Z2") return EdgeClass::Z2;
    return std::nullopt;
}

long long shift_vertex_count(int k, int n, long long cap) {
    if (k < 1 || n < k)
        throw BadParameter("shift tuples need n >= k >= 1, got k=" + std::to_string(k) +
                           " n=" + std::to_string(n));
    long long c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > cap)
            throw BadParameter("C(" + std::to_string(n) + ", " + std::to_string(k) +
                               ") exceeds the vertex cap of " + std::to_string(cap));
    }
    return c;
}

namespace {

std::vector<std::vector<int>> enumerate_tuples(int k, int n) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        tuples.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return tuples;
}

std::vector<int> make_rank(int v_count, const TupleOrder& order) {
    std::vector<int> rank(v_count);
    for (int i = 0; i < v_count; ++i) rank[i] = i;
    switch (order.kind) {
    case TupleOrder::Kind::Lex:
        break;
    case TupleOrder::Kind::Seeded: {
        std::mt19937_64 rng(order.seed);
        std::shuffle(rank.begin(), rank.end(), rng);
        break;
    }
    case TupleOrder::Kind::Explicit: {
        if (int(order.explicit_rank.size()) != v_count)
            throw BadParameter("explicit order must rank every vertex");
        rank = order.explicit_rank;
        std::vector<int> sorted = rank;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < v_count; ++i)
            if (sorted[i] != i) throw BadParameter("explicit order is not a permutation");
        break;
    }
    }
    return rank;
}

std::string order_descr(const TupleOrder& order) {
    switch (order.kind) {
    case TupleOrder::Kind::Lex: return "lex";
    case TupleOrder::Kind::Seeded: return "random:" + std::to_string(order.seed);
    case TupleOrder::Kind::Explicit: return "explicit";
    }
    return "?";
}

struct ArcAccumulator {
    std::map<std::pair<int, int>, EdgeClass> classed;

    // First class to claim a pair wins; opposite duplicates are a build bug
    // surfaced through Digraph::add_arc later.
    void add(int u, int v, EdgeClass c) { classed.emplace(std::make_pair(u, v), c); }
};

LabeledConstruction assemble(ConstructionKind kind, int k, int n, const TupleOrder& order,
                             int prefix_len) {
    LabeledConstruction lc;
    lc.kind = kind;
    lc.k = k;
    lc.n = n;
    long long v_count = shift_vertex_count(k, n);
    auto tuples = enumerate_tuples(k, n);
    lc.order_rank = make_rank(int(v_count), order);
    lc.order_descr = order_descr(order);

    std::map<std::vector<int>, int> id_of;
    for (int i = 0; i < int(tuples.size()); ++i) id_of[tuples[i]] = i;

    ArcAccumulator acc;

    // X: one-position shifts
    for (int u = 0; u < int(tuples.size()); ++u) {
        std::vector<int> shifted(tuples[u].begin() + 1, tuples[u].end());
        shifted.push_back(0);
        for (int x = tuples[u][k - 1] + 1; x <= n; ++x) {
            shifted[k - 1] = x;
            auto it = id_of.find(shifted);
            if (it != id_of.end()) acc.add(u, it->second, EdgeClass::X);
        }
    }

    if (kind != ConstructionKind::Shift) {
        // Y: first prefix_len+1 entries of u equal the last prefix_len+1 of v
        int span = prefix_len + 1;
        std::map<std::vector<int>, std::vector<int>> by_suffix;
        for (int v = 0; v < int(tuples.size()); ++v)
            by_suffix[std::vector<int>(tuples[v].end() - span, tuples[v].end())].push_back(v);
        for (int u = 0; u < int(tuples.size()); ++u) {
            std::vector<int> pre(tuples[u].begin(), tuples[u].begin() + span);
            auto it = by_suffix.find(pre);
            if (it == by_suffix.end()) continue;
            for (int v : it->second)
                if (v != u) acc.add(u, v, EdgeClass::Y);
        }

        // Z1 on shared prefixes, Z2 on shared suffixes; arcs follow the order
        auto add_groups = [&](bool prefix, EdgeClass cls) {
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v = 0; v < int(tuples.size()); ++v) {
                std::vector<int> key =
                    prefix ? std::vector<int>(tuples[v].begin(), tuples[v].begin() + prefix_len + 1)
                           : std::vector<int>(tuples[v].end() - prefix_len - 1, tuples[v].end());
                groups[key].push_back(v);
            }
            for (auto& [key, members] : groups)
                for (size_t i = 0; i < members.size(); ++i)
                    for (size_t j = i + 1; j < members.size(); ++j) {
                        int a = members[i], b = members[j];
                        if (lc.order_rank[a] > lc.order_rank[b]) std::swap(a, b);
                        acc.add(a, b, cls);
                    }
        };
        add_groups(true, EdgeClass::Z1);
        add_groups(false, EdgeClass::Z2);
    }

    lc.digraph = Digraph(int(v_count));
    for (const auto& [arc, cls] : acc.classed) lc.digraph.add_arc(arc.first, arc.second);
    lc.arc_list = lc.digraph.arcs();
    lc.arc_classes.reserve(lc.arc_list.size());
    for (auto& a : lc.arc_list) lc.arc_classes.push_back(acc.classed.at(a));

    lc.labels.reserve(tuples.size());
    for (auto& t : tuples) lc.labels.push_back(ShiftVertex{t});
    return lc;
}

} // namespace

EdgeClass LabeledConstruction::class_of(int u, int v) const {
    auto it = std::lower_bound(arc_list.begin(), arc_list.end(), std::make_pair(u, v));
    if (it == arc_list.end() || *it != std::make_pair(u, v))
        throw BadParameter("no arc " + std::to_string(u) + "->" + std::to_string(v));
    return arc_classes[size_t(it - arc_list.begin())];
}

int LabeledConstruction::count_class(EdgeClass c) const {
    int k0 = 0;
    for (EdgeClass e : arc_classes)
        if (e == c) ++k0;
    return k0;
}

Digraph shift_graph(int k, int n) {
    return shift_digraph(k, n).digraph;
}

LabeledConstruction shift_digraph(int k, int n) {
    return assemble(ConstructionKind::Shift, k, n, TupleOrder::lex(), 0);
}

LabeledConstruction build_f7(int n, const TupleOrder& order) {
    if (n < 8) throw BadParameter("7-tuple construction needs n >= 8");
    return assemble(ConstructionKind::F7, 7, n, order, 3);
}

LabeledConstruction build_f5(int n, const TupleOrder& order) {
    if (n < 6) throw BadParameter("5-tuple construction needs n >= 6");
    return assemble(ConstructionKind::F5, 5, n, order, 2);
}

// --- verification -------------------------------------------------------------------

TournamentPartitionResult verify_neighborhood_tournament_partition(const LabeledConstruction& c,
                                                                   int v, int max_parts) {
    if (c.kind == ConstructionKind::Shift)
        throw BadParameter("tournament partition applies to the f7/f5 constructions");
    if (v < 0 || v >= c.digraph.n()) throw VertexOutOfRange("no such vertex");

    const Digraph& d = c.digraph;
    // Groups by arc class and direction around v. For 5-tuples the two
    // shift groups merge into one (they are Y-complete to each other).
    enum { ShiftIn, ShiftOut, PrefixSide, SuffixSide, NGroups };
    std::vector<VertexSet> groups(NGroups);
    auto put = [&](int u, EdgeClass cls, bool arc_into_v) {
        switch (cls) {
        case EdgeClass::X: groups[arc_into_v ? ShiftIn : ShiftOut].push_back(u); break;
        // Y out of v lands on tuples sharing v's prefix window; Y into v
        // comes from tuples sharing v's suffix window.
        case EdgeClass::Y: groups[arc_into_v ? SuffixSide : PrefixSide].push_back(u); break;
        case EdgeClass::Z1: groups[PrefixSide].push_back(u); break;
        case EdgeClass::Z2: groups[SuffixSide].push_back(u); break;
        }
    };
    d.out_bits(v).for_each([&](int u) { put(u, c.class_of(v, u), false); });
    d.in_bits(v).for_each([&](int u) { put(u, c.class_of(u, v), true); });

    std::vector<VertexSet> parts;
    if (c.kind == ConstructionKind::F5) {
        VertexSet shift = groups[ShiftIn];
        shift.insert(shift.end(), groups[ShiftOut].begin(), groups[ShiftOut].end());
        parts = {shift, groups[PrefixSide], groups[SuffixSide]};
    } else {
        parts = {groups[ShiftIn], groups[ShiftOut], groups[PrefixSide], groups[SuffixSide]};
    }
    parts.erase(std::remove_if(parts.begin(), parts.end(),
                               [](const VertexSet& s) { return s.empty(); }),
                parts.end());

    TournamentPartitionResult res;
    res.parts_needed = int(parts.size());
    for (auto& part : parts)
        for (size_t i = 0; i < part.size(); ++i)
            for (size_t j = i + 1; j < part.size(); ++j)
                if (!d.adjacent(part[i], part[j])) {
                    res.stable_pair = {part[i], part[j]};
                    return res;
                }
    if (int(parts.size()) > max_parts) return res;
    res.ok = true;
    res.partition = std::move(parts);
    return res;
}

std::optional<std::array<int, 3>> verify_no_cyclic_triangle(const LabeledConstruction& c) {
    const Digraph& d = c.digraph;
    for (auto [u, v] : d.arcs()) {
        Bitset closing = d.out_bits(v);
        closing &= d.in_bits(u);
        int w = closing.first();
        if (w >= 0) return std::array<int, 3>{u, v, w};
    }
    return std::nullopt;
}

TriangleProfileResult verify_triangle_profile_f5(const LabeledConstruction& c) {
    if (c.kind != ConstructionKind::F5)
        throw BadParameter("triangle profile applies to the 5-tuple construction");
    const Digraph& d = c.digraph;
    TriangleProfileResult res;
    for (auto [u, v] : d.arcs()) {
        Bitset closing = d.out_bits(v);
        closing &= d.in_bits(u);
        bool bad = false;
        closing.for_each([&](int w) {
            if (bad) return;
            std::array<EdgeClass, 3> cls{c.class_of(u, v), c.class_of(v, w), c.class_of(w, u)};
            int x = 0, y = 0;
            for (EdgeClass e : cls) {
                if (e == EdgeClass::X) ++x;
                if (e == EdgeClass::Y) ++y;
            }
            if (x != 2 || y != 1) {
                res.ok = false;
                res.witness = {u, v, w};
                res.classes = cls;
                bad = true;
            }
        });
        if (!res.ok) break;
    }
    return res;
}

int dichromatic_lower_bound_via_gallai_roy(const LabeledConstruction& c,
                                           const SolveOptions& opts) {
    int divisor;
    switch (c.kind) {
    case ConstructionKind::F7: divisor = 3; break;
    case ConstructionKind::F5: divisor = 2; break;
    default: throw BadParameter("lower bound applies to the f7/f5 constructions");
    }
    int chi = chromatic_number_undirected(shift_graph(c.k, c.n), opts);
    return (chi + divisor - 1) / divisor;
}

// --- files -------------------------------------------------------------------------------

void write_labeled(const LabeledConstruction& c, std::ostream& out) {
    const char* kind = c.kind == ConstructionKind::F7   ? "f7"
                       : c.kind == ConstructionKind::F5 ? "f5"
                                                        : "shift";
    if (c.order_descr == "explicit")
        throw BadParameter("explicit orders are not representable in files");
    out << "#dichroma kind=" << kind << " k=" << c.k << " n=" << c.n
        << " order=" << c.order_descr << "\n";
    write_edge_list(c.digraph, out);
    for (size_t i = 0; i < c.arc_list.size(); ++i)
        out << "#class " << c.arc_list[i].first << ' ' << c.arc_list[i].second << ' '
            << edge_class_name(c.arc_classes[i]) << "\n";
}

std::string to_labeled_text(const LabeledConstruction& c) {
    std::ostringstream out;
    write_labeled(c, out);
    return out.str();
}

LabeledConstruction parse_labeled(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_labeled_text(text);
}

LabeledConstruction parse_labeled_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string kind, order = "lex";
    int k = -1, n = -1;
    std::map<std::pair<int, int>, EdgeClass> classes;
    std::ostringstream plain;
    while (std::getline(in, line)) {
        if (line.rfind("#dichroma", 0) == 0) {
            std::istringstream ls(line.substr(9));
            std::string kv;
            while (ls >> kv) {
                size_t eq = kv.find('=');
                if (eq == std::string::npos) throw ParseError("bad parameter token: " + kv);
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (key == "kind") kind = val;
                else if (key == "k") k = std::stoi(val);
                else if (key == "n") n = std::stoi(val);
                else if (key == "order") order = val;
            }
        } else if (line.rfind("#class", 0) == 0) {
            std::istringstream ls(line.substr(6));
            int u, v;
            std::string cls;
            if (!(ls >> u >> v >> cls)) throw ParseError("bad #class line: " + line);
            auto e = edge_class_from_name(cls);
            if (!e) throw ParseError("unknown edge class: " + cls);
            classes[{u, v}] = *e;
        } else {
            plain << line << '\n';
        }
    }
    if (kind.empty() || k < 0 || n < 0)
        throw ParseError("missing #dichroma parameter header");

    TupleOrder ord = TupleOrder::lex();
    if (order.rfind("random:", 0) == 0) ord = TupleOrder::seeded(std::stoull(order.substr(7)));
    else if (order != "lex") throw ParseError("unknown order: " + order);

    LabeledConstruction lc;
    if (kind == "f7") lc = build_f7(n, ord);
    else if (kind == "f5") lc = build_f5(n, ord);
    else if (kind == "shift") lc = shift_digraph(k, n);
    else throw ParseError("unknown construction kind: " + kind);

    // The arcs and classes in the file are authoritative; reject mismatches
    // instead of silently regenerating.
    Digraph from_file = parse_edge_list(plain.str());
    if (!(from_file == lc.digraph))
        throw ParseError("edge list does not match the declared construction parameters");
    if (classes.size() != lc.arc_list.size())
        throw ParseError("#class block does not cover the arc set");
    for (size_t i = 0; i < lc.arc_list.size(); ++i) {
        auto it = classes.find(lc.arc_list[i]);
        if (it == classes.end())
            throw ParseError("missing #class entry for an arc");
        if (it->second != lc.arc_classes[i])
            throw ParseError("#class entry disagrees with the construction");
    }
    return lc;
}

} // namespace dichroma
