#include "dichroma/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace dichroma {

// --- build -----------------------------------------------------------------

namespace {

Digraph build_oriented_path(const std::string& arrows) {
    int m = 0;
    std::vector<bool> forward;
    for (size_t i = 0; i < arrows.size(); i += 2) {
        if (arrows.compare(i, 2, "->") == 0) forward.push_back(true);
        else if (arrows.compare(i, 2, "<-") == 0) forward.push_back(false);
        else throw BadParameter("bad arrow string: " + arrows);
    }
    m = int(forward.size()) + 1;
    Digraph d(m);
    for (int i = 0; i + 1 < m; ++i) {
        if (forward[i]) d.add_arc(i, i + 1);
        else d.add_arc(i + 1, i);
    }
    return d;
}

} // namespace

Pattern build(const PatternTag& tag) {
    Pattern p;
    p.tag = tag;
    if (auto* t = std::get_if<TTkTag>(&tag.v)) {
        if (t->k < 1) throw BadParameter("tt: k must be >= 1");
        p.graph = transitive_tournament(t->k);
    } else if (auto* t = std::get_if<DirPathTag>(&tag.v)) {
        if (t->m < 1) throw BadParameter("dirpath: m must be >= 1");
        Digraph d(t->m);
        for (int i = 0; i + 1 < t->m; ++i) d.add_arc(i, i + 1);
        p.graph = d;
    } else if (auto* t = std::get_if<OrientedPathTag>(&tag.v)) {
        p.graph = build_oriented_path(t->arrows);
    } else if (auto* t = std::get_if<StarTag>(&tag.v)) {
        if (t->in_leaves < 0 || t->out_leaves < 0 || t->in_leaves + t->out_leaves < 1)
            throw BadParameter("star: needs at least one leaf");
        Digraph d(1 + t->in_leaves + t->out_leaves);
        for (int i = 1; i <= t->in_leaves; ++i) d.add_arc(i, 0);
        for (int i = t->in_leaves + 1; i <= t->in_leaves + t->out_leaves; ++i) d.add_arc(0, i);
        p.graph = d;
    } else if (auto* t = std::get_if<BroomTag>(&tag.v)) {
        if (t->r < 1) throw BadParameter("broom: r must be >= 1");
        Digraph d(3 + t->r);
        if (t->dir12 == EdgeDir::Forward) d.add_arc(0, 1);
        else d.add_arc(1, 0);
        if (t->dir23 == EdgeDir::Forward) d.add_arc(1, 2);
        else d.add_arc(2, 1);
        for (int i = 3; i < 3 + t->r; ++i) {
            if (t->leaf == LeafDir::Out) d.add_arc(2, i);
            else d.add_arc(i, 2);
        }
        p.graph = d;
    } else if (std::get_if<CyclicTriangleTag>(&tag.v)) {
        p.graph = cyclic_triangle();
    } else if (std::get_if<InTriangleTag>(&tag.v)) {
        // cyclic triangle {0,1,2}; 3 is seen by all of it
        p.graph = Digraph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
    } else if (std::get_if<OutTriangleTag>(&tag.v)) {
        p.graph = Digraph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
    } else if (auto* t = std::get_if<RK1PlusTag>(&tag.v)) {
        if (t->r < 0 || !t->inner) throw BadParameter("rk1p: bad parameters");
        p.graph = disjoint_union(edgeless(t->r), build(*t->inner).graph);
    } else if (auto* t = std::get_if<DeltaJoinTag>(&tag.v)) {
        if (t->parts.size() != 3 || !t->parts[0] || !t->parts[1] || !t->parts[2])
            throw BadParameter("delta: needs exactly three parts");
        p.graph = triangle_join(build(*t->parts[0]).graph, build(*t->parts[1]).graph,
                                build(*t->parts[2]).graph);
    } else if (auto* t = std::get_if<ForwardJoinTag>(&tag.v)) {
        if (!t->left || !t->right) throw BadParameter("join: needs two parts");
        p.graph = join_forward(build(*t->left).graph, build(*t->right).graph);
    } else {
        throw BadParameter("raw patterns carry their own graph");
    }
    return p;
}

// --- parsing ----------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Split on commas at parenthesis depth 0.
std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

int parse_int(const std::string& s, const std::string& what) {
    if (!all_digits(s)) throw ParseError("expected integer for " + what + ", got '" + s + "'");
    return std::stoi(s);
}

std::map<std::string, std::string> parse_kv(const std::string& s) {
    std::map<std::string, std::string> kv;
    for (const auto& part : split_top_level(s)) {
        size_t eq = part.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value, got '" + part + "'");
        kv[trim(part.substr(0, eq))] = trim(part.substr(eq + 1));
    }
    return kv;
}

PatternTag parse_tag(const std::string& raw);

std::shared_ptr<PatternTag> parse_component(const std::string& raw) {
    return std::make_shared<PatternTag>(parse_tag(raw));
}

PatternTag parse_tag(const std::string& raw) {
    std::string s = trim(raw);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0 && i + 1 < s.size()) {
                wraps = false;
                break;
            }
        }
        if (wraps) return parse_tag(s.substr(1, s.size() - 2));
    }
    if (all_digits(s)) return {TTkTag{parse_int(s, "tt size")}};
    if (s == "c3" || s == "triangle") return {CyclicTriangleTag{}};
    if (s == "it") return {InTriangleTag{}};
    if (s == "ot") return {OutTriangleTag{}};

    size_t colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("unrecognized pattern '" + s + "'");
    std::string head = s.substr(0, colon), rest = s.substr(colon + 1);

    if (head == "tt") return {TTkTag{parse_int(rest, "tt size")}};
    if (head == "dirpath") return {DirPathTag{parse_int(rest, "path length")}};
    if (head == "path") {
        bool all_forward = true;
        for (size_t i = 0; i < rest.size(); i += 2) {
            if (rest.compare(i, 2, "->") == 0) continue;
            if (rest.compare(i, 2, "<-") == 0) {
                all_forward = false;
                continue;
            }
            throw ParseError("bad arrow string '" + rest + "'");
        }
        if (all_forward) return {DirPathTag{int(rest.size() / 2) + 1}};
        return {OrientedPathTag{rest}};
    }
    if (head == "star") {
        auto kv = parse_kv(rest);
        if (!kv.count("in") || !kv.count("out")) throw ParseError("star needs in= and out=");
        return {StarTag{parse_int(kv["in"], "star in"), parse_int(kv["out"], "star out")}};
    }
    if (head == "broom") {
        auto kv = parse_kv(rest);
        for (const char* key : {"r", "v12", "v23", "leaf"})
            if (!kv.count(key)) throw ParseError(std::string("broom needs ") + key + "=");
        auto dir = [](const std::string& v) {
            if (v == "fwd") return EdgeDir::Forward;
            if (v == "bwd") return EdgeDir::Backward;
            throw ParseError("broom direction must be fwd or bwd, got '" + v + "'");
        };
        auto leaf = [](const std::string& v) {
            if (v == "in") return LeafDir::In;
            if (v == "out") return LeafDir::Out;
            throw ParseError("broom leaf must be in or out, got '" + v + "'");
        };
        return {BroomTag{parse_int(kv["r"], "broom r"), dir(kv["v12"]), dir(kv["v23"]),
                         leaf(kv["leaf"])}};
    }
    if (head == "delta") {
        auto parts = split_top_level(rest);
        if (parts.size() != 3) throw ParseError("delta needs three components");
        DeltaJoinTag t;
        for (auto& part : parts) t.parts.push_back(parse_component(part));
        return {std::move(t)};
    }
    if (head == "join") {
        auto parts = split_top_level(rest);
        if (parts.size() != 2) throw ParseError("join needs two components");
        return {ForwardJoinTag{parse_component(parts[0]), parse_component(parts[1])}};
    }
    if (head == "rk1p") {
        auto parts = split_top_level(rest);
        if (parts.size() != 2) throw ParseError("rk1p needs r and an inner pattern");
        return {RK1PlusTag{parse_int(parts[0], "rk1p r"), parse_component(parts[1])}};
    }
    throw ParseError("unrecognized pattern '" + s + "'");
}

} // namespace

Pattern parse_pattern(const std::string& text) { return build(parse_tag(text)); }

std::string format_pattern(const PatternTag& tag) {
    std::ostringstream out;
    if (auto* t = std::get_if<TTkTag>(&tag.v)) out << "tt:" << t->k;
    else if (auto* t = std::get_if<DirPathTag>(&tag.v)) out << "dirpath:" << t->m;
    else if (auto* t = std::get_if<OrientedPathTag>(&tag.v)) out << "path:" << t->arrows;
    else if (auto* t = std::get_if<StarTag>(&tag.v))
        out << "star:in=" << t->in_leaves << ",out=" << t->out_leaves;
    else if (auto* t = std::get_if<BroomTag>(&tag.v))
        out << "broom:r=" << t->r << ",v12=" << (t->dir12 == EdgeDir::Forward ? "fwd" : "bwd")
            << ",v23=" << (t->dir23 == EdgeDir::Forward ? "fwd" : "bwd")
            << ",leaf=" << (t->leaf == LeafDir::In ? "in" : "out");
    else if (std::get_if<CyclicTriangleTag>(&tag.v)) out << "c3";
    else if (std::get_if<InTriangleTag>(&tag.v)) out << "it";
    else if (std::get_if<OutTriangleTag>(&tag.v)) out << "ot";
    else if (auto* t = std::get_if<RK1PlusTag>(&tag.v))
        out << "rk1p:" << t->r << ",(" << format_pattern(*t->inner) << ")";
    else if (auto* t = std::get_if<DeltaJoinTag>(&tag.v)) {
        out << "delta:";
        for (size_t i = 0; i < t->parts.size(); ++i)
            out << (i ? "," : "") << "(" << format_pattern(*t->parts[i]) << ")";
    } else if (auto* t = std::get_if<ForwardJoinTag>(&tag.v))
        out << "join:(" << format_pattern(*t->left) << "),(" << format_pattern(*t->right) << ")";
    else out << "raw";
    return out.str();
}

Pattern reverse(const Pattern& p) {
    const auto& tag = p.tag;
    if (auto* t = std::get_if<StarTag>(&tag.v))
        return build({StarTag{t->out_leaves, t->in_leaves}});
    if (auto* t = std::get_if<BroomTag>(&tag.v)) {
        auto flip = [](EdgeDir e) {
            return e == EdgeDir::Forward ? EdgeDir::Backward : EdgeDir::Forward;
        };
        return build({BroomTag{t->r, flip(t->dir12), flip(t->dir23),
                               t->leaf == LeafDir::In ? LeafDir::Out : LeafDir::In}});
    }
    if (auto* t = std::get_if<DirPathTag>(&tag.v)) {
        if (t->m == 1) return build({DirPathTag{1}});
        std::string arrows;
        for (int i = 0; i + 1 < t->m; ++i) arrows += "<-";
        return build({OrientedPathTag{arrows}});
    }
    if (auto* t = std::get_if<OrientedPathTag>(&tag.v)) {
        std::string arrows;
        for (size_t i = 0; i < t->arrows.size(); i += 2)
            arrows += t->arrows.compare(i, 2, "->") == 0 ? "<-" : "->";
        bool all_forward = arrows.find("<-") == std::string::npos;
        if (all_forward) return build({DirPathTag{int(arrows.size() / 2) + 1}});
        return build({OrientedPathTag{arrows}});
    }
    Pattern r;
    r.graph = reverse(p.graph);
    r.tag = {RawTag{}};
    return r;
}

// --- matcher -----------------------------------------------------------------

namespace {

struct Matcher {
    const Digraph& host;
    const Digraph& pat;
    bool induced_mode;
    uint64_t budget;
    uint64_t nodes = 0;

    std::vector<int> order;      // pattern vertices, assignment order
    std::vector<int> map;        // pattern -> host, -1 unassigned
    Bitset used;                 // host vertices taken
    std::vector<Bitset> deg_ok;  // per pattern vertex: hosts with enough degree
    std::vector<Bitset> host_anti; // complement adjacency rows (induced mode)

    Matcher(const Digraph& h, const Digraph& p, bool ind, uint64_t b)
        : host(h), pat(p), induced_mode(ind), budget(b), map(p.n(), -1), used(h.n()) {
        deg_ok.resize(pat.n());
        for (int q = 0; q < pat.n(); ++q) {
            Bitset ok(host.n());
            for (int v = 0; v < host.n(); ++v)
                if (host.out_degree(v) >= pat.out_degree(q) &&
                    host.in_degree(v) >= pat.in_degree(q))
                    ok.set(v);
            deg_ok[q] = ok;
        }
        if (induced_mode) {
            host_anti.resize(host.n());
            for (int v = 0; v < host.n(); ++v) {
                Bitset anti = host.adjacency_bits(v).complement();
                anti.reset(v);
                host_anti[v] = anti;
            }
        }
        build_order();
    }

    // Root = pattern vertex with the fewest degree-compatible hosts, then
    // most-constrained-first.
    void build_order() {
        int np = pat.n();
        std::vector<bool> placed(np, false);
        int root = 0;
        for (int q = 1; q < np; ++q)
            if (deg_ok[q].count() < deg_ok[root].count()) root = q;
        order.push_back(root);
        placed[root] = true;
        for (int step = 1; step < np; ++step) {
            int best = -1, best_links = -1;
            for (int q = 0; q < np; ++q) {
                if (placed[q]) continue;
                int links = 0;
                for (int r : order)
                    if (pat.adjacent(q, r)) ++links;
                if (links > best_links) {
                    best_links = links;
                    best = q;
                }
            }
            order.push_back(best);
            placed[best] = true;
        }
    }

    bool place(size_t idx) {
        if (idx == order.size()) return true;
        if (++nodes > budget)
            throw BudgetExceeded("pattern search exceeded node budget", 0, 1);
        int q = order[idx];
        Bitset cand = used.complement();
        cand &= deg_ok[q];
        for (size_t j = 0; j < idx; ++j) {
            int r = order[j];
            if (pat.has_arc(q, r)) cand &= host.in_bits(map[r]);
            else if (pat.has_arc(r, q)) cand &= host.out_bits(map[r]);
            else if (induced_mode) cand &= host_anti[map[r]];
        }
        bool found = false;
        for (int v = cand.first(); v >= 0 && !found; v = cand.next_at(v + 1)) {
            map[q] = v;
            used.set(v);
            found = place(idx + 1);
            if (!found) {
                used.reset(v);
                map[q] = -1;
            }
        }
        return found;
    }

    std::optional<Embedding> run() {
        if (pat.n() > host.n()) return std::nullopt;
        if (pat.n() == 0) return Embedding{{}, induced_mode};
        if (!place(0)) return std::nullopt;
        return Embedding{map, induced_mode};
    }
};

} // namespace

std::optional<Embedding> find_induced(const Digraph& d, const Pattern& p,
                                      const MatchOptions& opts) {
    Matcher m(d, p.graph, true, opts.max_nodes);
    return m.run();
}

std::optional<Embedding> find_subgraph(const Digraph& d, const Pattern& p,
                                       const MatchOptions& opts) {
    Matcher m(d, p.graph, false, opts.max_nodes);
    return m.run();
}

bool is_free(const Digraph& d, const Pattern& p, const MatchOptions& opts) {
    return !find_induced(d, p, opts).has_value();
}

FreeOfAllResult free_of_all(const Digraph& d, const std::vector<Pattern>& patterns,
                            const MatchOptions& opts) {
    FreeOfAllResult r;
    for (size_t i = 0; i < patterns.size(); ++i) {
        if (auto e = find_induced(d, patterns[i], opts)) {
            r.free = false;
            r.violating_index = int(i);
            r.witness = *e;
            return r;
        }
    }
    return r;
}

bool check_embedding(const Digraph& d, const Pattern& p, const Embedding& e) {
    const Digraph& g = p.graph;
    if (int(e.map.size()) != g.n()) return false;
    std::vector<bool> seen(d.n(), false);
    for (int v : e.map) {
        if (v < 0 || v >= d.n() || seen[v]) return false;
        seen[v] = true;
    }
    for (int a = 0; a < g.n(); ++a)
        for (int b = 0; b < g.n(); ++b) {
            if (a == b) continue;
            if (g.has_arc(a, b) && !d.has_arc(e.map[a], e.map[b])) return false;
            if (e.induced && !g.has_arc(a, b) && !g.has_arc(b, a) &&
                d.adjacent(e.map[a], e.map[b]) && a < b)
                return false;
        }
    return true;
}

// --- hero grammar -------------------------------------------------------------

namespace {

struct HeroSearch {
    const Digraph& h;
    std::vector<bool> known_failure;
    std::vector<bool> visited;

    explicit HeroSearch(const Digraph& hh)
        : h(hh), known_failure(size_t(1) << hh.n(), false),
          visited(size_t(1) << hh.n(), false) {}

    static VertexSet mask_to_set(uint32_t mask) {
        VertexSet s;
        while (mask) {
            s.push_back(__builtin_ctz(mask));
            mask &= mask - 1;
        }
        return s;
    }

    bool transitive(uint32_t mask) const {
        return is_acyclic(induced(h, mask_to_set(mask)).graph);
    }

    bool out_complete(uint32_t from, uint32_t to) const {
        for (uint32_t a = from; a;) {
            int u = __builtin_ctz(a);
            a &= a - 1;
            for (uint32_t b = to; b;) {
                int v = __builtin_ctz(b);
                b &= b - 1;
                if (!h.has_arc(u, v)) return false;
            }
        }
        return true;
    }

    std::unique_ptr<HeroDerivation> derive(uint32_t mask) {
        if (visited[mask] && known_failure[mask]) return nullptr;
        auto fail = [&]() -> std::unique_ptr<HeroDerivation> {
            visited[mask] = true;
            known_failure[mask] = true;
            return nullptr;
        };
        VertexSet verts = mask_to_set(mask);
        auto node = std::make_unique<HeroDerivation>();
        node->vertices = verts;
        if (verts.size() == 1) {
            node->rule = HeroDerivation::Rule::Single;
            return node;
        }

        auto sub = induced(h, verts);
        Condensation cond = scc_condensation(sub.graph);
        size_t m = cond.components.size();
        if (m >= 2) {
            // any forward-join split aligns with a condensation prefix
            for (size_t cut = 1; cut < m; ++cut) {
                uint32_t left = 0, right = 0;
                for (size_t i = 0; i < m; ++i)
                    for (int loc : cond.components[i]) {
                        uint32_t bit = uint32_t(1) << sub.to_host[loc];
                        (i < cut ? left : right) |= bit;
                    }
                auto lc = derive(left);
                if (!lc) continue;
                auto rc = derive(right);
                if (!rc) continue;
                node->rule = HeroDerivation::Rule::Join;
                node->left = mask_to_set(left);
                node->right = mask_to_set(right);
                node->left_child = std::move(lc);
                node->right_child = std::move(rc);
                return node;
            }
            return fail();
        }

        // strongly connected: look for Delta(1, ., .) around each pivot
        for (int v : verts) {
            uint32_t a = 0, b = 0; // out- and in-parts within mask
            for (int u : verts) {
                if (u == v) continue;
                if (h.has_arc(v, u)) a |= uint32_t(1) << u;
                else b |= uint32_t(1) << u;
            }
            if (!a || !b) continue;
            if (!out_complete(a, b)) continue;
            if (transitive(b)) {
                if (auto hc = derive(a)) {
                    node->rule = HeroDerivation::Rule::DeltaHeroFirst;
                    node->pivot = v;
                    node->hero_part = mask_to_set(a);
                    node->transitive_part = mask_to_set(b);
                    node->hero_child = std::move(hc);
                    return node;
                }
            }
            if (transitive(a)) {
                if (auto hc = derive(b)) {
                    node->rule = HeroDerivation::Rule::DeltaHeroSecond;
                    node->pivot = v;
                    node->hero_part = mask_to_set(b);
                    node->transitive_part = mask_to_set(a);
                    node->hero_child = std::move(hc);
                    return node;
                }
            }
        }
        return fail();
    }
};

} // namespace

std::optional<HeroDerivation> is_hero_in_tournaments(const Digraph& h) {
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v)
            if (!h.adjacent(u, v))
                throw NotATournament("vertices " + std::to_string(u) + " and " +
                                     std::to_string(v) + " are non-adjacent");
    if (h.n() == 0) throw NotATournament("empty digraph");
    if (h.n() > 9)
        throw BudgetExceeded("hero recognizer limited to 9 vertices", 0, 1);
    HeroSearch s(h);
    auto d = s.derive((uint32_t(1) << h.n()) - 1);
    if (!d) return std::nullopt;
    return std::move(*d);
}

namespace {

bool sets_partition(const VertexSet& whole, std::vector<const VertexSet*> parts) {
    VertexSet merged;
    for (auto* p : parts) merged.insert(merged.end(), p->begin(), p->end());
    std::sort(merged.begin(), merged.end());
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end()) return false;
    VertexSet w = whole;
    std::sort(w.begin(), w.end());
    return merged == w;
}

bool all_arcs(const Digraph& h, const VertexSet& from, const VertexSet& to) {
    for (int u : from)
        for (int v : to)
            if (!h.has_arc(u, v)) return false;
    return true;
}

} // namespace

bool verify_hero_derivation(const Digraph& h, const HeroDerivation& d) {
    switch (d.rule) {
    case HeroDerivation::Rule::Single:
        return d.vertices.size() == 1;
    case HeroDerivation::Rule::Join: {
        if (!d.left_child || !d.right_child) return false;
        if (!sets_partition(d.vertices, {&d.left, &d.right})) return false;
        if (d.left.empty() || d.right.empty()) return false;
        if (!all_arcs(h, d.left, d.right)) return false;
        if (d.left_child->vertices != d.left || d.right_child->vertices != d.right) return false;
        return verify_hero_derivation(h, *d.left_child) &&
               verify_hero_derivation(h, *d.right_child);
    }
    case HeroDerivation::Rule::DeltaHeroFirst:
    case HeroDerivation::Rule::DeltaHeroSecond: {
        if (!d.hero_child) return false;
        VertexSet pivot{d.pivot};
        if (!sets_partition(d.vertices, {&pivot, &d.hero_part, &d.transitive_part})) return false;
        if (d.hero_part.empty() || d.transitive_part.empty()) return false;
        if (!is_acyclic(induced(h, d.transitive_part).graph)) return false;
        const VertexSet& out_part =
            d.rule == HeroDerivation::Rule::DeltaHeroFirst ? d.hero_part : d.transitive_part;
        const VertexSet& in_part =
            d.rule == HeroDerivation::Rule::DeltaHeroFirst ? d.transitive_part : d.hero_part;
        if (!all_arcs(h, pivot, out_part)) return false;
        if (!all_arcs(h, out_part, in_part)) return false;
        if (!all_arcs(h, in_part, pivot)) return false;
        if (d.hero_child->vertices != d.hero_part) return false;
        return verify_hero_derivation(h, *d.hero_child);
    }
    }
    return false;
}

// --- broom types --------------------------------------------------------------

int classify_broom_type(const Pattern& broom) {
    auto* t = std::get_if<BroomTag>(&broom.tag.v);
    if (!t) throw NotValidOrientation("pattern is not a broom");
    bool f12 = t->dir12 == EdgeDir::Forward;
    bool f23 = t->dir23 == EdgeDir::Forward;
    if (f12 && f23) return 1;
    if (f12 && !f23) return 2;
    if (!f12 && f23) return 3;
    return 4;
}

int broom_leaf_count(const Pattern& broom) {
    auto* t = std::get_if<BroomTag>(&broom.tag.v);
    if (!t) throw NotValidOrientation("pattern is not a broom");
    return t->r;
}

} // namespace dichroma
