#include <algorithm>
#include <climits>

#include <nlohmann/json.hpp>

#include "dichroma/decomposition.hpp"

namespace dichroma {

using json = nlohmann::json;

namespace {

constexpr long long kSat = LLONG_MAX / 4;

long long sat_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSat / b) return kSat;
    return a * b;
}

long long sat_add(long long a, long long b) { return std::min(a + b, kSat); }

int clamp_int(long long v) { return int(std::min<long long>(v, INT_MAX / 4)); }

} // namespace

long long broom_free_bound(int omega, int r, int s) {
    if (omega < 0) throw BadParameter("clique number must be non-negative");
    long long b = 1; // no adjacent pair means no cycle at all
    for (int w = 2; w <= omega; ++w) {
        long long gamma = b;
        long long k = ramsey_upper(std::max(r, s), w + 1);
        // 2 (w (gamma+1) + gamma (6k+25) + 2) (k+1)
        long long inner = sat_add(sat_mul(w, sat_add(gamma, 1)),
                                  sat_add(sat_mul(gamma, sat_add(sat_mul(6, k), 25)), 2));
        b = sat_mul(2, sat_mul(inner, sat_add(k, 1)));
    }
    return b;
}

namespace {

using ColorMap = std::map<VertexId, int>;

struct PipelineCtx {
    const Digraph& d;
    int r, s;
    int type_b, type_bp;
    std::string type_pair;
    json levels = json::array();
};

struct ColoredSet {
    ColorMap colors;
    int used = 0; // upper bound on palette size (max color + 1)
};

int distinct_colors(const ColorMap& m) {
    std::vector<int> vals;
    vals.reserve(m.size());
    for (auto& [v, c] : m) vals.push_back(c);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return int(vals.size());
}

ColoredSet color_scope(PipelineCtx& ctx, const VertexSet& scope, int depth);

// Dense repack of an engine or recursive result into a block starting at
// `offset`; returns colors actually spanned.
int splice_block(ColorMap& into, const ColorMap& part, int offset) {
    std::map<int, int> dense;
    for (auto& [v, c] : part) dense.emplace(c, 0);
    int next = 0;
    for (auto& [c, idx] : dense) idx = next++;
    for (auto& [v, c] : part) into[v] = offset + dense.at(c);
    return next;
}

void assert_span(long long used, long long budget, const char* what) {
    if (used > budget)
        throw ColorBudgetBug(std::string(what) + " used " + std::to_string(used) +
                             " colors against " + std::to_string(budget));
}

// Oracle for the engine runs inside the pipeline: picks the nice set by a
// fixed template and colors it one clique level down.
struct TemplateOracle {
    PipelineCtx* ctx;
    const InducedSubdigraph* part; // engine works on this induced graph
    int k;
    int depth;
    long long gamma;
    // template: scan path (host ids) forward or backward, out- or in-side
    std::vector<VertexId> path;
    bool forward;
    bool out_side;
    const Bitset* x_bits = nullptr; // Y-mode: choose anchors from X instead

    ColoredNiceSet operator()(const Digraph& g, const VertexSet& remaining) const {
        Bitset rem = Bitset::of(g.n(), remaining);
        VertexSet s_local;
        if (x_bits) {
            // smallest anchor x in X with a neighbor in the remaining set
            int anchor = -1;
            x_bits->for_each([&](int x) {
                if (anchor >= 0) return;
                bool touches = false;
                rem.for_each([&](int lv) {
                    if (!touches && ctx->d.adjacent(x, part->to_host[lv])) touches = true;
                });
                if (touches) anchor = x;
            });
            if (anchor < 0)
                throw NicenessViolated("no anchor reaches the remaining set", -1, {}, {});
            rem.for_each([&](int lv) {
                if (ctx->d.adjacent(anchor, part->to_host[lv])) s_local.push_back(lv);
            });
        } else {
            int m = int(path.size());
            int found = -1;
            for (int step = 0; step < m && found < 0; ++step) {
                int i = forward ? step : m - 1 - step;
                rem.for_each([&](int lv) {
                    int hv = part->to_host[lv];
                    bool hit = out_side ? ctx->d.has_arc(path[i], hv)
                                        : ctx->d.has_arc(hv, path[i]);
                    if (hit) found = i;
                });
                if (found >= 0) {
                    rem.for_each([&](int lv) {
                        int hv = part->to_host[lv];
                        bool hit = out_side ? ctx->d.has_arc(path[found], hv)
                                            : ctx->d.has_arc(hv, path[found]);
                        if (hit) s_local.push_back(lv);
                    });
                }
            }
            if (s_local.empty())
                throw NicenessViolated("no path vertex reaches the remaining set", -1, {}, {});
        }

        ColoredNiceSet ans;
        ans.cert.k = k;
        ans.cert.S = s_local;
        Bitset s_bits = Bitset::of(g.n(), s_local);
        Bitset outside = rem.and_not(s_bits);
        for (int lv : s_local) {
            int ins = (g.in_bits(lv) & outside).count();
            int outs = (g.out_bits(lv) & outside).count();
            if (ins <= k) ans.cert.S1.push_back(lv);
            else if (outs <= k) ans.cert.S2.push_back(lv);
            else
                throw NicenessViolated("nice-set template failed", part->to_host[lv],
                                       (g.in_bits(lv) & outside).to_vector(),
                                       (g.out_bits(lv) & outside).to_vector());
        }
        // color S one clique level down
        VertexSet host_set;
        for (int lv : s_local) host_set.push_back(part->to_host[lv]);
        ColoredSet sc = color_scope(*ctx, host_set, depth + 1);
        assert_span(distinct_colors(sc.colors), gamma, "nice-set template coloring");
        for (int lv : s_local) ans.s_colors[lv] = sc.colors.at(part->to_host[lv]);
        return ans;
    }
};

// Runs the product-palette engine on an induced part with a template oracle;
// returns host-keyed colors.
ColorMap run_engine(PipelineCtx& ctx, const VertexSet& part_hosts, TemplateOracle oracle,
                    long long gamma, int k) {
    ColorMap out;
    if (part_hosts.empty()) return out;
    InducedSubdigraph part = induced(ctx.d, part_hosts);
    oracle.part = &part;
    Dicoloring f = color_via_nice_sets(part.graph, oracle, clamp_int(gamma), k);
    for (int i = 0; i < part.graph.n(); ++i) out[part.to_host[i]] = f.colors[i];
    return out;
}

// Structured coloring of S = N[C u X] inside one strongly connected
// component; returns colors in [0, used).
ColoredSet color_closed_neighborhood(PipelineCtx& ctx, const Pmct& pmct_host,
                                     const NeighborhoodSplit& split_host,
                                     const Bitset& s_hostbits, int omega, long long gamma, int k,
                                     json& level) {
    const Digraph& d = ctx.d;
    ColorMap colors;
    Bitset assigned(d.n());
    int offset = 0;
    json palette = json::object();

    auto take = [&](const Bitset& want) {
        Bitset fresh = want & s_hostbits;
        fresh.subtract(assigned);
        assigned |= fresh;
        return fresh;
    };

    // 1. K and its neighbors, one block per K vertex
    const VertexSet& K = pmct_host.K;
    Bitset kb = Bitset::of(d.n(), K);
    take(kb);
    Bitset nk = take(neighbors_bits(d, kb));
    {
        int begin = offset;
        std::vector<VertexSet> groups(K.size());
        nk.for_each([&](int u) {
            for (size_t i = 0; i < K.size(); ++i)
                if (d.adjacent(K[i], u)) {
                    groups[i].push_back(u);
                    break;
                }
        });
        for (size_t i = 0; i < K.size(); ++i) {
            colors[K[i]] = offset++;
            if (groups[i].empty()) continue;
            ColoredSet g = color_scope(ctx, groups[i], 1);
            assert_span(distinct_colors(g.colors), gamma, "clique neighborhood block");
            offset += splice_block(colors, g.colors, offset);
        }
        palette["clique_blocks"] = {begin, offset};
        assert_span(offset - begin, sat_mul(omega, sat_add(gamma, 1)), "clique block total");
    }

    // 2. path interior, alternating by position
    const auto& P = pmct_host.P;
    {
        int begin = offset;
        Bitset pb(d.n());
        for (int v : P) pb.set(v);
        Bitset fresh = take(pb);
        bool any = false;
        for (size_t i = 0; i < P.size(); ++i)
            if (fresh.test(P[i])) {
                colors[P[i]] = offset + int(i % 2);
                any = true;
            }
        if (any) offset += 2;
        palette["path"] = {begin, offset};
    }

    // 3. neighbors of the path ends (or of the whole short path)
    std::vector<VertexId> q_verts, p_core;
    if (int(P.size()) > 4) {
        q_verts = {P[0], P[1], P[P.size() - 2], P[P.size() - 1]};
        p_core.assign(P.begin() + 2, P.end() - 2);
    } else {
        q_verts.assign(P.begin(), P.end());
    }
    {
        int begin = offset;
        Bitset qb(d.n());
        for (int v : q_verts) qb.set(v);
        Bitset fresh = take(neighbors_bits(d, qb));
        std::vector<VertexSet> groups(q_verts.size());
        fresh.for_each([&](int u) {
            for (size_t i = 0; i < q_verts.size(); ++i)
                if (d.adjacent(q_verts[i], u)) {
                    groups[i].push_back(u);
                    break;
                }
        });
        for (auto& g : groups) {
            if (g.empty()) continue;
            ColoredSet gc = color_scope(ctx, g, 1);
            assert_span(distinct_colors(gc.colors), gamma, "path-end neighborhood block");
            offset += splice_block(colors, gc.colors, offset);
        }
        palette["path_ends"] = {begin, offset};
        assert_span(offset - begin, sat_mul(4, gamma), "path-end total");
    }

    // 4. the remaining neighbors of the trimmed path: four cases by the
    // broom types
    Bitset wb = take(neighbors_bits(d, Bitset::of(d.n(), VertexSet(p_core.begin(), p_core.end()))));
    {
        int begin = offset;
        VertexSet w = wb.to_vector();
        if (!w.empty()) {
            int tb = ctx.type_b;
            int tbp = ctx.type_bp;

            Bitset not_w = wb.complement();
            FirstLastPartition fl = partition_first_last(d, p_core, not_w.to_vector());

            auto engine_part = [&](const VertexSet& hosts, bool fwd, bool out_side,
                                   const char* tag) {
                if (hosts.empty()) return;
                TemplateOracle oracle{&ctx, nullptr, k, 1, gamma, p_core, fwd, out_side, nullptr};
                ColorMap part = run_engine(ctx, hosts, oracle, gamma, k);
                assert_span(distinct_colors(part), sat_mul(2, sat_mul(gamma, sat_add(k, 1))),
                            tag);
                offset += splice_block(colors, part, offset);
            };

            auto minus_set = [&](const VertexSet& a, const VertexSet& b) {
                Bitset bb = Bitset::of(d.n(), b);
                VertexSet r2;
                for (int v : a)
                    if (!bb.test(v)) r2.push_back(v);
                return r2;
            };

            VertexSet leftover;
            if (tb == 1 && tbp == 2) {
                engine_part(fl.a_minus, true, true, "first-in side");
                engine_part(minus_set(fl.a_plus, fl.a_minus), true, false, "first-out side");
            } else if (tb == 3 && tbp == 4) {
                engine_part(fl.b_minus, false, true, "last-in side");
                engine_part(minus_set(fl.b_plus, fl.b_minus), false, false, "last-out side");
            } else if (tb == 3 && tbp == 2) {
                engine_part(fl.a_plus, true, false, "first-out side");
                engine_part(minus_set(fl.b_minus, fl.a_plus), false, true, "last-in side");
                leftover = minus_set(minus_set(w, fl.a_plus), fl.b_minus);
                if (!leftover.empty()) {
                    auto layers = layer_decomposition(d, p_core, leftover, LayerMode::FirstIn);
                    json jl = json::array();
                    for (auto& l : layers) jl.push_back(l);
                    level["layers"] = jl;
                    level["residue_modulus"] = 3;
                    // one palette block per residue class; cycles stay
                    // inside single layers, so layers share the block
                    for (int ci = 0; ci < 3; ++ci) {
                        int block = 0;
                        for (size_t j = ci; j < layers.size(); j += 3) {
                            if (layers[j].empty()) continue;
                            ColoredSet lc = color_scope(ctx, layers[j], 1);
                            assert_span(distinct_colors(lc.colors), gamma, "layer block");
                            block = std::max(block,
                                             splice_block(colors, lc.colors, offset));
                        }
                        offset += block;
                    }
                }
            } else if (tb == 1 && tbp == 4) {
                engine_part(fl.a_minus, true, true, "first-in side");
                engine_part(minus_set(fl.b_plus, fl.a_minus), false, false, "last-out side");
                leftover = minus_set(minus_set(w, fl.a_minus), fl.b_plus);
                if (!leftover.empty()) {
                    auto layers = layer_decomposition(d, p_core, leftover, LayerMode::FirstOut);
                    auto classes = residue_classes(layers, 5);
                    json jl = json::array();
                    for (auto& l : layers) jl.push_back(l);
                    level["layers"] = jl;
                    level["residue_modulus"] = 5;
                    for (auto& cls : classes) {
                        if (cls.empty()) continue;
                        // split by roles in maximum tournaments of the class
                        InducedSubdigraph ci_sub = induced(d, cls);
                        Bitset sink_b(d.n()), source_b(d.n());
                        if (underlying_clique_number(ci_sub.graph) == omega) {
                            for (const auto& kk : all_maximum_underlying_cliques(ci_sub.graph)) {
                                for (int lv : tournament_sink_vertices(ci_sub.graph, kk))
                                    sink_b.set(ci_sub.to_host[lv]);
                                for (int lv : tournament_source_vertices(ci_sub.graph, kk))
                                    source_b.set(ci_sub.to_host[lv]);
                            }
                        }
                        VertexSet sinks, sources, rest;
                        for (int v : cls) {
                            if (sink_b.test(v)) sinks.push_back(v);
                            else if (source_b.test(v)) sources.push_back(v);
                            else rest.push_back(v);
                        }
                        for (const VertexSet* piece : {&sinks, &sources, &rest}) {
                            if (piece->empty()) continue;
                            ColoredSet pc = color_scope(ctx, *piece, 1);
                            assert_span(distinct_colors(pc.colors), gamma, "role block");
                            offset += splice_block(colors, pc.colors, offset);
                        }
                    }
                }
            } else {
                throw BadParameter("unsupported type pair");
            }
        }
        palette["trimmed_path_cases"] = {begin, offset};
        assert_span(offset - begin,
                    sat_mul(gamma, sat_add(sat_mul(4, k), 19)), "case total");
    }

    // 5. whatever is left can only be reached through X
    {
        int begin = offset;
        Bitset rest = s_hostbits.and_not(assigned);
        if (rest.any()) {
            Bitset xb = Bitset::of(d.n(), split_host.X);
            Bitset yb = Bitset::of(d.n(), split_host.Y);
            if (!rest.is_subset_of(yb))
                throw ColorBudgetBug("unassigned closed-neighborhood vertices outside Y");
            TemplateOracle oracle{&ctx, nullptr, k, 1, gamma, {}, true, true, nullptr};
            oracle.x_bits = &xb;
            ColorMap part = run_engine(ctx, rest.to_vector(), oracle, gamma, k);
            assert_span(distinct_colors(part), sat_mul(2, sat_mul(gamma, sat_add(k, 1))),
                        "anchor-reachable block");
            offset += splice_block(colors, part, offset);
            assigned |= rest;
        }
        palette["anchor_reachable"] = {begin, offset};
    }

    level["palette"] = palette;
    long long c_level = sat_add(sat_mul(omega, sat_add(gamma, 1)),
                                sat_add(sat_mul(gamma, sat_add(sat_mul(6, k), 25)), 2));
    assert_span(offset, c_level, "closed neighborhood total");
    return {std::move(colors), offset};
}

ColoredSet color_component(PipelineCtx& ctx, const VertexSet& comp_hosts, int depth) {
    if (comp_hosts.size() == 1) return {{{comp_hosts[0], 0}}, 1};

    InducedSubdigraph comp = induced(ctx.d, comp_hosts);
    int omega = underlying_clique_number(comp.graph);
    long long gamma = broom_free_bound(omega - 1, ctx.r, ctx.s);
    long long k_ll = ramsey_upper(std::max(ctx.r, ctx.s), omega + 1);
    int k = clamp_int(k_ll);

    Pmct pmct_local = find_pmct(comp.graph);
    Pmct pmct_host;
    for (int lv : pmct_local.K) pmct_host.K.push_back(comp.to_host[lv]);
    std::sort(pmct_host.K.begin(), pmct_host.K.end());
    for (int lv : pmct_local.P) pmct_host.P.push_back(comp.to_host[lv]);

    NeighborhoodSplit split_local = broom_neighborhood_split(comp.graph, pmct_local);
    NeighborhoodSplit split_host;
    for (int lv : split_local.X) split_host.X.push_back(comp.to_host[lv]);
    for (int lv : split_local.Z) split_host.Z.push_back(comp.to_host[lv]);
    for (int lv : split_local.Y) split_host.Y.push_back(comp.to_host[lv]);

    // S = N[C u X] inside the component (host coordinates)
    Bitset comp_bits = Bitset::of(ctx.d.n(), comp_hosts);
    Bitset core = Bitset::of(ctx.d.n(), pmct_host.C());
    core |= Bitset::of(ctx.d.n(), split_host.X);
    Bitset s_bits = closed_neighbors_bits(ctx.d, core) & comp_bits;
    s_bits |= core;

    json level;
    level["depth"] = depth;
    level["component"] = comp_hosts;
    level["omega"] = omega;
    level["gamma_bound"] = gamma;
    level["k"] = k;
    level["pmct"] = {{"K", pmct_host.K}, {"P", pmct_host.P}};
    level["X"] = split_host.X;
    level["Y"] = split_host.Y;
    level["Z"] = split_host.Z;
    level["case"] = ctx.type_pair;

    ColoredSet s_colored = color_closed_neighborhood(ctx, pmct_host, split_host, s_bits,
                                                     omega, gamma, k, level);

    // bipartition of S against the rest of the component
    Bitset outside = comp_bits.and_not(s_bits);
    VertexSet s1, s2;
    s_bits.for_each([&](int v) {
        int ins = (ctx.d.in_bits(v) & outside).count();
        int outs = (ctx.d.out_bits(v) & outside).count();
        if (ins <= k) s1.push_back(v);
        else if (outs <= k) s2.push_back(v);
        else
            throw NicenessViolated("closed neighborhood is not nice", v,
                                   (ctx.d.in_bits(v) & outside).to_vector(),
                                   (ctx.d.out_bits(v) & outside).to_vector());
    });

    ColoredSet rest = color_scope(ctx, outside.to_vector(), depth);

    // product extension: rows 0..k, second coordinate splits S1/S2
    int c_used = s_colored.used;
    int width = std::max(2 * c_used, (rest.used + k) / (k + 1));
    width = std::max(width, 1);
    ColorMap out = rest.colors;
    Bitset s1b = Bitset::of(ctx.d.n(), s1);
    s_bits.for_each([&](int v) {
        bool in_s1 = s1b.test(v);
        Bitset conflicting = in_s1 ? ctx.d.in_bits(v) : ctx.d.out_bits(v);
        conflicting &= outside;
        std::vector<bool> taken(size_t(k) + 2, false);
        conflicting.for_each([&](int u) {
            int row = rest.colors.at(u) / width;
            if (row <= k) taken[row] = true;
            else throw ColorBudgetBug("row overflow in product extension");
        });
        int m = 0;
        while (m <= k && taken[m]) ++m;
        if (m > k) throw ColorBudgetBug("no free row in product extension");
        out[v] = m * width + s_colored.colors.at(v) + (in_s1 ? 0 : c_used);
    });

    level["colors_used_here"] = distinct_colors(out);
    ctx.levels.push_back(std::move(level));
    return {std::move(out), (k + 1) * width};
}

ColoredSet color_scope(PipelineCtx& ctx, const VertexSet& scope, int depth) {
    if (scope.empty()) return {};
    InducedSubdigraph sub = induced(ctx.d, scope);
    if (is_acyclic(sub.graph)) {
        ColoredSet out;
        for (int v : scope) out.colors[v] = 0;
        out.used = 1;
        return out;
    }
    Condensation cond = scc_condensation(sub.graph);
    ColoredSet out;
    for (const auto& comp_local : cond.components) {
        VertexSet comp_hosts;
        for (int lv : comp_local) comp_hosts.push_back(sub.to_host[lv]);
        std::sort(comp_hosts.begin(), comp_hosts.end());
        ColoredSet part = color_component(ctx, comp_hosts, depth);
        for (auto& [v, c] : part.colors) out.colors[v] = c;
        out.used = std::max(out.used, part.used);
    }
    return out;
}

} // namespace

BroomFreeResult dicolor_broom_free(const Digraph& d, const Pattern& b, const Pattern& b_prime,
                                   int tt_cap, const BroomFreeOptions& opts) {
    int type_b = classify_broom_type(b);
    int type_bp = classify_broom_type(b_prime);
    const Pattern* first = &b;
    const Pattern* second = &b_prime;
    if (type_b == 2 || type_b == 4) {
        std::swap(first, second);
        std::swap(type_b, type_bp);
    }
    if (!((type_b == 1 || type_b == 3) && (type_bp == 2 || type_bp == 4)))
        throw NotValidOrientation("brooms must have opposing orientations");

    MatchOptions match_opts;
    match_opts.max_nodes = opts.match_budget;
    if (auto e = find_induced(d, *first, match_opts))
        throw FreenessViolated("input contains the first broom", e->map);
    if (auto e = find_induced(d, *second, match_opts))
        throw FreenessViolated("input contains the second broom", e->map);

    std::string type_pair = std::to_string(type_b) + "-" + std::to_string(type_bp);
    PipelineCtx ctx{d, broom_leaf_count(*first), broom_leaf_count(*second),
                    type_b, type_bp, type_pair};

    VertexSet all(d.n());
    for (int v = 0; v < d.n(); ++v) all[v] = v;
    ColoredSet result = color_scope(ctx, all, 0);

    BroomFreeResult res;
    res.bound = broom_free_bound(underlying_clique_number(d), ctx.r, ctx.s);

    std::map<int, int> dense;
    for (auto& [v, c] : result.colors) dense.emplace(c, 0);
    int next = 0;
    for (auto& [c, idx] : dense) idx = next++;
    res.coloring.colors.assign(d.n(), 0);
    res.coloring.k = std::max(next, d.n() > 0 ? 1 : 0);
    for (auto& [v, c] : result.colors) res.coloring.colors[v] = dense.at(c);

    if (d.n() > 0 && !verify_dicoloring(d, res.coloring))
        throw ColorBudgetBug("pipeline produced an invalid dicoloring");
    if (next > res.bound)
        throw ColorBudgetBug("pipeline exceeded the recursive palette bound");

    json trace;
    trace["type_pair"] = type_pair;
    trace["tt_cap"] = tt_cap;
    trace["r"] = ctx.r;
    trace["s"] = ctx.s;
    trace["omega"] = underlying_clique_number(d);
    trace["bound"] = res.bound;
    trace["k_policy"] = "binomial(max(r,s)+omega-1, max(r,s)-1)";
    trace["colors_used"] = res.coloring.k;
    trace["levels"] = ctx.levels;
    res.trace_json = trace.dump();
    return res;
}

} // namespace dichroma
