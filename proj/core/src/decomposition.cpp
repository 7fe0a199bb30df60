#include "dichroma/decomposition.hpp"

#include <algorithm>
#include <climits>
#include <deque>

namespace dichroma {

// --- nice sets ------------------------------------------------------------------

bool verify_nice_set(const Digraph& d, const NiceSetCertificate& cert) {
    VertexSet s = normalize_vertex_set(d, cert.S);
    VertexSet s1 = normalize_vertex_set(d, cert.S1);
    VertexSet s2 = normalize_vertex_set(d, cert.S2);
    VertexSet merged = s1;
    merged.insert(merged.end(), s2.begin(), s2.end());
    std::sort(merged.begin(), merged.end());
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
        throw BadPartition("S1 and S2 overlap");
    if (merged != s) throw BadPartition("S1 and S2 do not cover S");
    if (s.empty()) return false;

    Bitset sb = Bitset::of(d.n(), s);
    for (int v : s1)
        if (d.in_bits(v).and_not(sb).count() > cert.k) return false;
    for (int v : s2)
        if (d.out_bits(v).and_not(sb).count() > cert.k) return false;
    return true;
}

namespace {

// Extension step of the product-palette recursion: lifts a dicoloring f0 of
// remaining \ S over a nice set. Colors are exposed as dense ints; the
// (k+1) x (2c)-pair structure is reconstructed per level by arithmetic on
// the dense range.
std::map<VertexId, int> extend_over_nice_set(const Digraph& d, const Bitset& remaining,
                                             const NiceSetCertificate& cert,
                                             const std::map<VertexId, int>& s_colors, int k,
                                             const std::map<VertexId, int>& f0) {
    Bitset sb = Bitset::of(d.n(), cert.S);
    Bitset outside = remaining.and_not(sb);

    int c_used = 0;
    for (auto& [v, col] : s_colors) c_used = std::max(c_used, col + 1);
    int f0_used = 0;
    for (auto& [v, col] : f0) f0_used = std::max(f0_used, col + 1);

    // second-coordinate width: room for the S1/S2 split and for an
    // injection of all f0 colors into (k+1) rows
    int width = std::max(2 * c_used, (f0_used + k) / (k + 1));
    width = std::max(width, 1);

    auto row_of = [&](int dense) { return dense / width; };

    std::map<VertexId, int> out;
    for (auto& [v, col] : f0) out[v] = col;

    Bitset s1 = Bitset::of(d.n(), cert.S1);
    for (int v : cert.S) {
        bool in_s1 = s1.test(v);
        Bitset conflicting = in_s1 ? d.in_bits(v) : d.out_bits(v);
        conflicting &= outside;
        std::vector<bool> taken(size_t(k) + 2, false);
        bool overflow = false;
        conflicting.for_each([&](int u) {
            int row = row_of(f0.at(u));
            if (row <= k) taken[row] = true;
            else overflow = true;
        });
        if (overflow) throw ColorBudgetBug("outside color row exceeds k+1 rows");
        int m = 0;
        while (m <= k && taken[m]) ++m;
        if (m > k)
            throw ColorBudgetBug("no free first coordinate; nice-set bound violated");
        int second = s_colors.at(v) + (in_s1 ? 0 : c_used);
        out[v] = m * width + second;
    }
    return out;
}

void check_oracle_answer(const Digraph& d, const Bitset& remaining, const ColoredNiceSet& ans,
                         int c, int k) {
    const auto& cert = ans.cert;
    if (cert.S.empty()) throw OracleFailure("oracle returned an empty set");
    for (int v : cert.S)
        if (!remaining.test(v))
            throw OracleFailure("oracle set leaves the remaining vertex set");
    // niceness within the remaining induced subgraph
    Bitset sb = Bitset::of(d.n(), cert.S);
    Bitset outside = remaining.and_not(sb);
    VertexSet s1 = cert.S1, s2 = cert.S2;
    VertexSet merged = s1;
    merged.insert(merged.end(), s2.begin(), s2.end());
    std::sort(merged.begin(), merged.end());
    VertexSet s_sorted = cert.S;
    std::sort(s_sorted.begin(), s_sorted.end());
    if (merged != s_sorted ||
        std::adjacent_find(merged.begin(), merged.end()) != merged.end())
        throw OracleFailure("oracle bipartition does not partition S");
    for (int v : s1)
        if ((d.in_bits(v) & outside).count() > cert.k)
            throw OracleFailure("S1 vertex " + std::to_string(v) +
                                " has more than k outside in-neighbors");
    for (int v : s2)
        if ((d.out_bits(v) & outside).count() > cert.k)
            throw OracleFailure("S2 vertex " + std::to_string(v) +
                                " has more than k outside out-neighbors");
    if (cert.k > k) throw OracleFailure("oracle certificate uses a larger k");

    // the provided coloring must be a valid dicoloring of D[S] with <= c colors
    std::map<int, int> dense;
    for (int v : s_sorted) {
        auto it = ans.s_colors.find(v);
        if (it == ans.s_colors.end())
            throw OracleFailure("oracle coloring misses vertex " + std::to_string(v));
        dense.emplace(it->second, 0);
    }
    if (int(dense.size()) > c)
        throw OracleFailure("oracle coloring uses more than c colors");
    auto sub = induced(d, s_sorted);
    Dicoloring f;
    f.colors.resize(sub.graph.n());
    int next = 0;
    for (auto& [col, idx] : dense) idx = next++;
    f.k = next;
    for (int i = 0; i < sub.graph.n(); ++i)
        f.colors[i] = dense.at(ans.s_colors.at(sub.to_host[i]));
    if (!verify_dicoloring(sub.graph, f))
        throw OracleFailure("oracle coloring has a monochromatic cycle");
}

} // namespace

Dicoloring color_via_nice_sets(const Digraph& d, const NiceSetOracle& oracle, int c, int k) {
    if (c < 0 || k < 0) throw BadParameter("c and k must be non-negative");
    Bitset remaining(d.n());
    for (int v = 0; v < d.n(); ++v) remaining.set(v);

    // peel nice sets, then extend back outward
    std::vector<ColoredNiceSet> peeled;
    std::vector<Bitset> scopes;
    while (remaining.any()) {
        ColoredNiceSet ans = oracle(d, remaining.to_vector());
        check_oracle_answer(d, remaining, ans, c, k);
        peeled.push_back(ans);
        scopes.push_back(remaining);
        remaining = remaining.and_not(Bitset::of(d.n(), ans.cert.S));
    }

    std::map<VertexId, int> colors;
    for (int i = int(peeled.size()) - 1; i >= 0; --i)
        colors = extend_over_nice_set(d, scopes[i], peeled[i].cert, peeled[i].s_colors, k, colors);

    // normalize to a dense palette
    std::map<int, int> dense;
    for (auto& [v, col] : colors) dense.emplace(col, 0);
    int next = 0;
    for (auto& [col, idx] : dense) idx = next++;
    Dicoloring f;
    f.colors.assign(d.n(), 0);
    f.k = std::max(next, d.n() > 0 ? 1 : 0);
    for (auto& [v, col] : colors) f.colors[v] = dense.at(col);

    long long budget = 2LL * c * (k + 1);
    if (next > budget)
        throw ColorBudgetBug("used " + std::to_string(next) + " colors against a budget of " +
                             std::to_string(budget));
    if (!verify_dicoloring(d, f))
        throw ColorBudgetBug("nice-set extension produced an invalid dicoloring");
    return f;
}

// --- PMCT -----------------------------------------------------------------------

VertexSet Pmct::C() const {
    VertexSet c = K;
    c.insert(c.end(), P.begin(), P.end());
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

std::vector<VertexId> Pmct::interior() const {
    if (P.size() <= 2) return {};
    return std::vector<VertexId>(P.begin() + 1, P.end() - 1);
}

VertexSet tournament_source_vertices(const Digraph& d, const VertexSet& k) {
    auto sub = induced(d, k);
    auto cond = scc_condensation(sub.graph);
    VertexSet res;
    for (int loc : cond.components.front()) res.push_back(sub.to_host[loc]);
    std::sort(res.begin(), res.end());
    return res;
}

VertexSet tournament_sink_vertices(const Digraph& d, const VertexSet& k) {
    auto sub = induced(d, k);
    auto cond = scc_condensation(sub.graph);
    VertexSet res;
    for (int loc : cond.components.back()) res.push_back(sub.to_host[loc]);
    std::sort(res.begin(), res.end());
    return res;
}

namespace {

// Shortest sink->source path with interior outside K; deterministic BFS
// with smallest-id tie-breaks. Returns the full path including endpoints.
std::optional<std::vector<VertexId>> shortest_return_path(const Digraph& d, const VertexSet& k) {
    VertexSet sinks = tournament_sink_vertices(d, k);
    VertexSet sources = tournament_source_vertices(d, k);
    Bitset kb = Bitset::of(d.n(), k);
    Bitset source_b = Bitset::of(d.n(), sources);

    std::optional<std::vector<VertexId>> best;
    for (int s : sinks) {
        // BFS over V \ K from s's out-neighbors, watching for arcs into a source
        std::vector<int> parent(d.n(), -1);
        std::vector<int> dist(d.n(), -1);
        std::deque<int> queue;
        d.out_bits(s).and_not(kb).for_each([&](int u) {
            if (dist[u] < 0) {
                dist[u] = 1;
                parent[u] = s;
                queue.push_back(u);
            }
        });
        std::optional<std::vector<VertexId>> local;
        // no direct sink->source arc exists inside a tournament, so every
        // return path has interior vertices
        while (!queue.empty() && !local) {
            int u = queue.front();
            queue.pop_front();
            int hit = (d.out_bits(u) & source_b).first();
            if (hit >= 0) {
                std::vector<VertexId> rev{hit, u};
                for (int w = parent[u]; w != s; w = parent[w]) rev.push_back(w);
                rev.push_back(s);
                std::reverse(rev.begin(), rev.end());
                local = rev;
                break;
            }
            d.out_bits(u).and_not(kb).for_each([&](int w) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            });
        }
        if (local && (!best || local->size() < best->size() ||
                      (local->size() == best->size() && *local < *best)))
            best = local;
    }
    return best;
}

} // namespace

Pmct find_pmct(const Digraph& d) {
    if (!is_strongly_connected(d))
        throw NotStronglyConnected("PMCT requires a strongly connected digraph");

    auto cliques = all_maximum_underlying_cliques(d);

    // a strongly connected maximum tournament wins outright; cliques are
    // sorted, so the first hit is the deterministic choice
    for (const auto& k : cliques)
        if (is_strongly_connected(induced(d, k).graph)) return Pmct{k, {}};

    std::optional<Pmct> best;
    for (const auto& k : cliques) {
        auto path = shortest_return_path(d, k);
        if (!path) continue;
        Pmct cand{k, *path};
        if (!best) {
            best = cand;
            continue;
        }
        size_t cand_size = cand.C().size(), best_size = best->C().size();
        if (cand_size < best_size ||
            (cand_size == best_size &&
             (cand.K < best->K || (cand.K == best->K && cand.P < best->P))))
            best = cand;
    }
    if (!best)
        throw NotStronglyConnected("no closed tournament found; input not strongly connected");
    return *best;
}

NeighborhoodSplit broom_neighborhood_split(const Digraph& d, const Pmct& c) {
    VertexSet cset = c.C();
    Bitset cb = Bitset::of(d.n(), cset);
    Bitset in_c = in_neighbors_bits(d, cb);   // sees C
    Bitset out_c = out_neighbors_bits(d, cb); // seen by C
    Bitset x = in_c & out_c;
    Bitset n_of_c = in_c | out_c;
    Bitset z = n_of_c.and_not(x);
    Bitset closed = n_of_c | cb;
    Bitset y = neighbors_bits(d, x).and_not(closed);
    return {x.to_vector(), z.to_vector(), y.to_vector()};
}

long long ramsey_upper(int a, int b) {
    if (a < 1 || b < 1) throw BadParameter("ramsey_upper needs positive arguments");
    // C(a+b-2, a-1), saturating
    const long long cap = LLONG_MAX / 4;
    long long n = a + b - 2, r = std::min<long long>(a - 1, n - (a - 1));
    long long c = 1;
    for (long long i = 1; i <= r; ++i) {
        if (c > cap / (n - r + i)) return cap;
        c = c * (n - r + i) / i;
    }
    return std::min(c, cap);
}

NiceSetCertificate verify_ncx_nice(const Digraph& d, const Pmct& c, const Pattern& b,
                                   const Pattern& b_prime) {
    int r = broom_leaf_count(b), s = broom_leaf_count(b_prime);
    int omega = underlying_clique_number(d);
    long long k_ll = ramsey_upper(std::max(r, s), omega + 1);
    int k = int(std::min<long long>(k_ll, INT_MAX / 2));

    VertexSet cset = c.C();
    Bitset cb = Bitset::of(d.n(), cset);
    Bitset in_c = in_neighbors_bits(d, cb);
    Bitset out_c = out_neighbors_bits(d, cb);
    Bitset x = in_c & out_c;
    Bitset core = cb | x;
    Bitset s_bits = closed_neighbors_bits(d, core);

    NiceSetCertificate cert;
    cert.k = k;
    cert.S = s_bits.to_vector();
    Bitset outside(d.n());
    for (int v = 0; v < d.n(); ++v)
        if (!s_bits.test(v)) outside.set(v);
    for (int v : cert.S) {
        int ins = (d.in_bits(v) & outside).count();
        int outs = (d.out_bits(v) & outside).count();
        if (ins <= k) cert.S1.push_back(v);
        else if (outs <= k) cert.S2.push_back(v);
        else
            throw NicenessViolated("vertex exceeds the bound on both sides", v,
                                   (d.in_bits(v) & outside).to_vector(),
                                   (d.out_bits(v) & outside).to_vector());
    }
    return cert;
}

// --- first/last path partitions -----------------------------------------------------

FirstLastPartition partition_first_last(const Digraph& d, const std::vector<VertexId>& path,
                                        const VertexSet& excluded) {
    Bitset ex = Bitset::of(d.n(), normalize_vertex_set(d, excluded));
    Bitset on_path(d.n());
    for (int v : path) on_path.set(v);

    FirstLastPartition res;
    Bitset nb = neighbors_bits(d, on_path);
    nb.subtract(ex);
    nb.for_each([&](int v) {
        int first = -1, last = -1;
        for (int i = 0; i < int(path.size()); ++i) {
            if (d.adjacent(path[i], v)) {
                if (first < 0) first = i;
                last = i;
            }
        }
        if (d.has_arc(path[first], v)) res.a_minus.push_back(v);
        else res.a_plus.push_back(v);
        if (d.has_arc(v, path[last])) res.b_plus.push_back(v);
        else res.b_minus.push_back(v);
    });
    return res;
}

std::vector<VertexSet> layer_decomposition(const Digraph& d, const std::vector<VertexId>& path,
                                           const VertexSet& candidates, LayerMode mode) {
    std::vector<VertexSet> layers(path.size());
    for (int v : normalize_vertex_set(d, candidates)) {
        int idx = -1;
        for (int i = 0; i < int(path.size()); ++i) {
            bool hit = mode == LayerMode::FirstIn ? d.has_arc(path[i], v) : d.has_arc(v, path[i]);
            if (hit) {
                idx = i;
                break;
            }
        }
        if (idx < 0)
            throw UncoveredVertex("vertex " + std::to_string(v) +
                                      " has no qualifying path neighbor",
                                  v);
        layers[idx].push_back(v);
    }
    return layers;
}

std::vector<VertexSet> residue_classes(const std::vector<VertexSet>& layers, int modulus) {
    if (modulus != 3 && modulus != 5) throw BadParameter("modulus must be 3 or 5");
    std::vector<VertexSet> classes(modulus);
    for (size_t j = 0; j < layers.size(); ++j) {
        auto& cls = classes[j % modulus];
        cls.insert(cls.end(), layers[j].begin(), layers[j].end());
    }
    for (auto& cls : classes) std::sort(cls.begin(), cls.end());
    return classes;
}

// --- bag chains -----------------------------------------------------------------------

namespace {

int chi_dir_of_bits(const Digraph& d, const Bitset& bits, const SolveOptions& opts) {
    return dichromatic_number(induced(d, bits).graph, opts).value;
}

} // namespace

BagChainCheck verify_bag_chain(const Digraph& d, const BagChain& chain, BagMode mode,
                               const SolveOptions& opts) {
    BagChainCheck res;
    Bitset seen(d.n());
    std::vector<Bitset> bags;
    for (const auto& bag : chain.bags) {
        Bitset b = Bitset::of(d.n(), normalize_vertex_set(d, bag));
        if (b.intersects(seen)) {
            res.ok = false;
            res.reason = "bags are not disjoint";
            return res;
        }
        seen |= b;
        bags.push_back(b);
    }
    for (size_t i = 0; i < bags.size(); ++i) {
        int chi = chi_dir_of_bits(d, bags[i], opts);
        bool ok = mode == BagMode::Exact ? chi == chain.beta : chi >= chain.beta;
        if (!ok) {
            res.ok = false;
            res.reason = "bag " + std::to_string(i + 1) + " has chi_dir " + std::to_string(chi);
            return res;
        }
    }
    for (size_t i = 0; i < bags.size(); ++i) {
        bool bad = false;
        bags[i].for_each([&](int v) {
            if (bad) return;
            if (i > 0 && chi_dir_of_bits(d, d.out_bits(v) & bags[i - 1], opts) > chain.c) {
                res.ok = false;
                res.reason = "vertex " + std::to_string(v) +
                             " has a dense out-neighborhood in the previous bag";
                bad = true;
                return;
            }
            if (i + 1 < bags.size() &&
                chi_dir_of_bits(d, d.in_bits(v) & bags[i + 1], opts) > chain.c) {
                res.ok = false;
                res.reason = "vertex " + std::to_string(v) +
                             " has a dense in-neighborhood in the next bag";
                bad = true;
            }
        });
        if (bad) return res;
    }
    return res;
}

BagChain extend_bag_chain_greedy(const Digraph& d, int c, int beta, const VertexSet& seed_bag,
                                 const SolveOptions& opts) {
    BagChain chain;
    chain.c = c;
    chain.beta = beta;
    chain.bags.push_back(normalize_vertex_set(d, seed_bag));
    Bitset used = Bitset::of(d.n(), chain.bags[0]);

    while (true) {
        const VertexSet& last = chain.bags.back();
        Bitset last_b = Bitset::of(d.n(), last);
        VertexSet next;
        Bitset next_b(d.n());
        for (int v = 0; v < d.n(); ++v) {
            if (used.test(v)) continue;
            if (chi_dir_of_bits(d, d.out_bits(v) & last_b, opts) > c) continue;
            // keep the previous bag's forward condition intact
            Bitset trial = next_b;
            trial.set(v);
            bool ok = true;
            last_b.for_each([&](int u) {
                if (ok && chi_dir_of_bits(d, d.in_bits(u) & trial, opts) > c) ok = false;
            });
            if (!ok) continue;
            VertexSet trial_set = next;
            trial_set.push_back(v);
            if (dichromatic_number(induced(d, trial_set).graph, opts).value > beta) continue;
            next = trial_set;
            next_b = trial;
        }
        if (next.empty()) break;
        if (dichromatic_number(induced(d, next).graph, opts).value != beta) break;
        chain.bags.push_back(next);
        used |= next_b;
    }
    return chain;
}

std::vector<int> zone_partition(const Digraph& d, const BagChain& chain, int c,
                                const SolveOptions& opts) {
    std::vector<Bitset> bags;
    Bitset in_chain(d.n());
    for (const auto& bag : chain.bags) {
        bags.push_back(Bitset::of(d.n(), normalize_vertex_set(d, bag)));
        in_chain |= bags.back();
    }
    std::vector<int> zones(d.n(), 0);
    for (int v = 0; v < d.n(); ++v) {
        if (in_chain.test(v)) {
            zones[v] = -1;
            continue;
        }
        for (int i = int(bags.size()) - 1; i >= 0; --i) {
            if (chi_dir_of_bits(d, d.in_bits(v) & bags[i], opts) > c) {
                zones[v] = i + 1;
                break;
            }
        }
    }
    return zones;
}

// --- layered partition checks ------------------------------------------------------------

PartitionCheckResult layered_partition_check(const Digraph& d,
                                             const std::vector<VertexSet>& parts, int k,
                                             const SolveOptions& opts) {
    PartitionCheckResult res;
    Bitset seen(d.n());
    std::vector<Bitset> bits;
    for (const auto& p : parts) {
        Bitset b = Bitset::of(d.n(), normalize_vertex_set(d, p));
        if (b.intersects(seen)) {
            res.hypotheses_ok = false;
            res.failing = "parts overlap";
            return res;
        }
        seen |= b;
        bits.push_back(b);
    }
    if (seen.count() != d.n()) {
        res.hypotheses_ok = false;
        res.failing = "parts do not cover V(D)";
        return res;
    }
    for (size_t i = 0; i < parts.size(); ++i)
        if (chi_dir_of_bits(d, bits[i], opts) > k) {
            res.hypotheses_ok = false;
            res.failing = "part " + std::to_string(i + 1) + " has chi_dir > k";
            return res;
        }
    for (size_t j = 1; j < parts.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
            bool back_arc = false;
            bits[j].for_each([&](int u) {
                if (!back_arc && (d.out_bits(u) & bits[i]).any()) back_arc = true;
            });
            if (!back_arc) continue;
            Bitset span(d.n());
            for (size_t t = i + 1; t <= j; ++t) span |= bits[t];
            if (chi_dir_of_bits(d, span, opts) > k) {
                res.hypotheses_ok = false;
                res.failing = "span (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                              "] has chi_dir > k after a back arc";
                return res;
            }
        }
    res.conclusion_bound = 2 * k;
    res.conclusion_checked = true;
    res.conclusion_ok = dichromatic_number(d, opts).value <= 2 * k;
    return res;
}

std::pair<int, int> measure_partition_constants(const Digraph& d,
                                                const std::vector<VertexSet>& parts,
                                                const SolveOptions& opts) {
    int m_prime = 0;
    std::vector<Bitset> bits;
    for (const auto& p : parts) bits.push_back(Bitset::of(d.n(), normalize_vertex_set(d, p)));
    for (size_t i = 0; i < parts.size(); ++i) {
        m_prime = std::max(m_prime, chi_dir_of_bits(d, bits[i], opts));
        Bitset before(d.n()), after(d.n());
        for (size_t t = 0; t < i; ++t) before |= bits[t];
        for (size_t t = i + 1; t < parts.size(); ++t) after |= bits[t];
        bits[i].for_each([&](int v) {
            m_prime = std::max(m_prime, chi_dir_of_bits(d, d.out_bits(v) & before, opts));
            m_prime = std::max(m_prime, chi_dir_of_bits(d, d.in_bits(v) & after, opts));
        });
    }
    int m = 0;
    for (int v = 0; v < d.n(); ++v) {
        VertexSet nn = non_neighbors(d, {v});
        m = std::max(m, dichromatic_number(induced(d, nn).graph, opts).value);
    }
    return {m, m_prime};
}

PartitionCheckResult partition_dichi_check(const Digraph& d,
                                           const std::vector<VertexSet>& parts, int m,
                                           int m_prime, const SolveOptions& opts) {
    PartitionCheckResult res;
    Bitset seen(d.n());
    std::vector<Bitset> bits;
    for (const auto& p : parts) {
        Bitset b = Bitset::of(d.n(), normalize_vertex_set(d, p));
        if (b.intersects(seen)) {
            res.hypotheses_ok = false;
            res.failing = "parts overlap";
            return res;
        }
        seen |= b;
        bits.push_back(b);
    }
    if (seen.count() != d.n()) {
        res.hypotheses_ok = false;
        res.failing = "parts do not cover V(D)";
        return res;
    }
    for (size_t i = 0; i < parts.size(); ++i) {
        if (chi_dir_of_bits(d, bits[i], opts) > m_prime) {
            res.hypotheses_ok = false;
            res.failing = "part " + std::to_string(i + 1) + " has chi_dir > m'";
            return res;
        }
        Bitset before(d.n()), after(d.n());
        for (size_t t = 0; t < i; ++t) before |= bits[t];
        for (size_t t = i + 1; t < parts.size(); ++t) after |= bits[t];
        bool bad = false;
        bits[i].for_each([&](int v) {
            if (bad) return;
            if (chi_dir_of_bits(d, d.out_bits(v) & before, opts) > m_prime ||
                chi_dir_of_bits(d, d.in_bits(v) & after, opts) > m_prime) {
                res.hypotheses_ok = false;
                res.failing = "vertex " + std::to_string(v) + " violates a neighborhood bound";
                bad = true;
            }
        });
        if (bad) return res;
    }
    for (int v = 0; v < d.n(); ++v) {
        VertexSet nn = non_neighbors(d, {v});
        if (dichromatic_number(induced(d, nn).graph, opts).value > m) {
            res.hypotheses_ok = false;
            res.failing = "vertex " + std::to_string(v) + " has chi_dir(N0) > m";
            return res;
        }
    }
    res.conclusion_bound = 6 * (m + m_prime) + 2;
    res.conclusion_checked = true;
    res.conclusion_ok = dichromatic_number(d, opts).value <= res.conclusion_bound;
    return res;
}

// --- domination ------------------------------------------------------------------------

bool dominates(const Digraph& d, const VertexSet& dominators, const VertexSet& target) {
    Bitset dom = Bitset::of(d.n(), dominators);
    Bitset covered = dom | out_neighbors_bits(d, dom);
    for (int v : target)
        if (!covered.test(v) && !dom.test(v)) return false;
    return true;
}

VertexSet minimal_dominating_set(const Digraph& d, const VertexSet& s) {
    VertexSet b = normalize_vertex_set(d, s);
    VertexSet target = b;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < b.size(); ++i) {
            VertexSet trial = b;
            trial.erase(trial.begin() + i);
            if (dominates(d, trial, target)) {
                b = trial;
                changed = true;
                break;
            }
        }
    }
    return b;
}

VertexSet source_layer(const Digraph& d, const VertexSet& s) {
    VertexSet sn = normalize_vertex_set(d, s);
    if (!is_acyclic(induced(d, sn).graph))
        throw NotAcyclic("source layer requires an acyclic induced set");
    Bitset sb = Bitset::of(d.n(), sn);
    VertexSet s1;
    for (int v : sn)
        if (!(d.in_bits(v) & sb).any()) s1.push_back(v);
    return s1;
}

} // namespace dichroma
