// Batch front door: generate the shift constructions, run verification
// suites, compute exact invariants, search patterns, and run the broom-free
// colorer. Reports are machine-readable JSON; exit codes: 0 all checks
// pass, 1 a check failed, 2 input/parse error, 3 budget exceeded (partial
// report still emitted).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dichroma/constructions.hpp"
#include "dichroma/decomposition.hpp"
#include "dichroma/dicolor.hpp"
#include "dichroma/digraph.hpp"
#include "dichroma/patterns.hpp"

using namespace dichroma;
using json = nlohmann::json;

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr const char* kReportSchema = "dichroma-report/1";

int thread_count() {
    const char* env = std::getenv("DICHROMA_THREADS");
    if (!env) return 1;
    int t = std::atoi(env);
    return std::max(1, std::min(t, 64));
}

// Chunked parallel sweep with per-index result slots; deterministic because
// every index writes only its own slot.
template <class F>
void parallel_for(int n, F&& fn) {
    int t = std::min(thread_count(), std::max(1, n));
    if (t == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    for (int w = 0; w < t; ++w)
        workers.emplace_back([&, w] {
            for (int i = w; i < n; i += t) fn(i);
        });
    for (auto& th : workers) th.join();
}

struct Reporter {
    json checks = json::array();
    bool any_fail = false;
    bool any_budget = false;

    template <class F>
    void run(const std::string& claim, F&& body) {
        auto start = std::chrono::steady_clock::now();
        json check;
        check["claim"] = claim;
        try {
            json witness = body();
            check["status"] = "pass";
            check["witness"] = witness;
        } catch (const BudgetExceeded& e) {
            check["status"] = "skipped";
            check["witness"] = {{"reason", e.what()}, {"lower", e.lower}, {"upper", e.upper}};
            any_budget = true;
        } catch (const Error& e) {
            check["status"] = "fail";
            check["witness"] = {{"reason", e.what()}};
            any_fail = true;
        }
        auto end = std::chrono::steady_clock::now();
        check["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
        checks.push_back(std::move(check));
    }

    void fail(json& check, const json& witness) {
        check["status"] = "fail";
        check["witness"] = witness;
        any_fail = true;
    }
};

// body() returning this type marks an explicit failure with a witness
struct CheckFailed {
    json witness;
};

json finish_report(const std::string& command, Reporter& rep,
                   const std::optional<uint64_t>& seed) {
    json report;
    report["schema"] = kReportSchema;
    report["tool"] = {{"name", "dichroma"}, {"version", kToolVersion}};
    report["command"] = command;
    if (seed) report["seed"] = *seed;
    report["checks"] = rep.checks;
    return report;
}

void emit(const json& report, const std::string& path) {
    if (path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        out << report.dump(2) << "\n";
    }
}

int exit_code(const Reporter& rep) {
    if (rep.any_fail) return 1;
    if (rep.any_budget) return 3;
    return 0;
}

TupleOrder parse_order(const std::string& text, std::optional<uint64_t>& seed_out) {
    if (text == "lex") return TupleOrder::lex();
    if (text.rfind("random:", 0) == 0) {
        uint64_t seed = std::stoull(text.substr(7));
        seed_out = seed;
        return TupleOrder::seeded(seed);
    }
    throw BadParameter("order must be lex or random:<seed>");
}

Digraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_edge_list(in);
}

LabeledConstruction load_construction(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_labeled(in);
}

// --- gen ----------------------------------------------------------------------

int cmd_gen(const std::string& family, int n, int k, const std::string& order_text,
            const std::string& out_path, const std::string& format, long long vertex_cap) {
    std::optional<uint64_t> seed;
    TupleOrder order = parse_order(order_text, seed);

    LabeledConstruction c;
    if (family == "f7") {
        shift_vertex_count(7, std::max(n, 7), vertex_cap);
        c = build_f7(n, order);
    } else if (family == "f5") {
        shift_vertex_count(5, std::max(n, 5), vertex_cap);
        c = build_f5(n, order);
    } else if (family == "shift") {
        shift_vertex_count(k, std::max(n, k), vertex_cap);
        c = shift_digraph(k, n);
    } else {
        throw BadParameter("unknown family " + family);
    }

    std::string text = format == "dot" ? to_dot(c.digraph) : to_labeled_text(c);
    if (out_path.empty()) std::cout << text;
    else {
        std::ofstream out(out_path);
        out << text;
    }
    return 0;
}

// --- verify -------------------------------------------------------------------

void verify_construction(const LabeledConstruction& c, Reporter& rep,
                         const std::vector<std::string>& claims, const SolveOptions& solve) {
    bool is_f7 = c.kind == ConstructionKind::F7;
    int max_parts = is_f7 ? 4 : 3;

    auto wants = [&](const std::string& id) {
        return claims.empty() || std::find(claims.begin(), claims.end(), id) != claims.end();
    };

    if (wants("5.1"))
        rep.run("5.1", [&]() -> json {
            int lower = dichromatic_lower_bound_via_gallai_roy(c, solve);
            auto exact = dichromatic_number(c.digraph, solve);
            if (lower > exact.value)
                throw Error("lower bound " + std::to_string(lower) + " exceeds chi_dir " +
                            std::to_string(exact.value));
            return {{"lower_bound", lower}, {"chi_dir", exact.value}};
        });

    if (wants("5.2"))
        rep.run("5.2", [&]() -> json {
            std::vector<int> bad(c.digraph.n(), -1);
            std::vector<std::pair<int, int>> pairs(c.digraph.n(), {-1, -1});
            parallel_for(c.digraph.n(), [&](int v) {
                auto res = verify_neighborhood_tournament_partition(c, v, max_parts);
                if (!res.ok) {
                    bad[v] = res.parts_needed;
                    if (res.stable_pair) pairs[v] = *res.stable_pair;
                }
            });
            for (int v = 0; v < c.digraph.n(); ++v)
                if (bad[v] >= 0) {
                    json w = {{"vertex", v}, {"parts_needed", bad[v]}};
                    if (pairs[v].first >= 0)
                        w["stable_pair"] = {pairs[v].first, pairs[v].second};
                    throw Error("neighborhood of vertex " + std::to_string(v) +
                                " does not partition into " + std::to_string(max_parts) +
                                " tournaments");
                }
            return {{"vertices_checked", c.digraph.n()}, {"max_parts", max_parts}};
        });

    if (wants("5.3"))
        rep.run("5.3", [&]() -> json {
            if (is_f7) {
                auto witness = verify_no_cyclic_triangle(c);
                if (witness)
                    throw Error("cyclic triangle at {" + std::to_string((*witness)[0]) + ", " +
                                std::to_string((*witness)[1]) + ", " +
                                std::to_string((*witness)[2]) + "}");
                return {{"cyclic_triangles", 0}};
            }
            auto res = verify_triangle_profile_f5(c);
            if (!res.ok)
                throw Error("triangle with classes {" +
                            std::string(edge_class_name(res.classes[0])) + ", " +
                            edge_class_name(res.classes[1]) + ", " +
                            edge_class_name(res.classes[2]) + "}");
            return {{"profile", "XXY"}};
        });

    if (is_f7 && wants("star-free"))
        rep.run("star-free", [&]() -> json {
            std::vector<int> found(6, 0);
            parallel_for(6, [&](int in_leaves) {
                Pattern star = build({StarTag{in_leaves, 5 - in_leaves}});
                if (find_induced(c.digraph, star)) found[in_leaves] = 1;
            });
            for (int i = 0; i < 6; ++i)
                if (found[i])
                    throw Error("induced degree-5 star with " + std::to_string(i) +
                                " in-leaves present");
            return {{"splits_checked", 6}};
        });

    if (!is_f7 && wants("it-free"))
        rep.run("it-free", [&]() -> json {
            Pattern it = build({InTriangleTag{}});
            if (find_subgraph(c.digraph, it))
                throw Error("in-triangle occurs as a subgraph");
            return {{"subgraph", "absent"}};
        });
}

int cmd_verify_family(const std::string& family, int n, const std::string& in_path,
                      const std::string& order_text, const std::vector<std::string>& claims,
                      const std::string& report_path, const SolveOptions& solve,
                      const std::string& command) {
    std::optional<uint64_t> seed;
    LabeledConstruction c;
    if (!in_path.empty()) {
        c = load_construction(in_path);
        if ((family == "f7" && c.kind != ConstructionKind::F7) ||
            (family == "f5" && c.kind != ConstructionKind::F5))
            throw BadParameter("file does not contain a " + family + " construction");
    } else {
        TupleOrder order = parse_order(order_text, seed);
        c = family == "f7" ? build_f7(n, order) : build_f5(n, order);
    }

    Reporter rep;
    verify_construction(c, rep, claims, solve);
    emit(finish_report(command, rep, seed), report_path);
    return exit_code(rep);
}

int cmd_verify_nice_set(const std::string& in_path, const std::string& cert_path,
                        const std::string& report_path, const std::string& command) {
    Digraph d = load_digraph(in_path);
    std::ifstream cin_f(cert_path);
    if (!cin_f) throw ParseError("cannot open " + cert_path);
    json j = json::parse(cin_f, nullptr, false);
    if (j.is_discarded()) throw ParseError("certificate is not valid JSON");

    NiceSetCertificate cert;
    cert.S = j.value("S", VertexSet{});
    cert.S1 = j.value("S1", VertexSet{});
    cert.S2 = j.value("S2", VertexSet{});
    cert.k = j.value("k", 0);

    Reporter rep;
    rep.run("nice-set", [&]() -> json {
        if (!verify_nice_set(d, cert)) throw Error("certificate does not verify");
        return {{"size", cert.S.size()}, {"k", cert.k}};
    });
    emit(finish_report(command, rep, std::nullopt), report_path);
    return exit_code(rep);
}

int cmd_verify_bag_chain(const std::string& in_path, const std::string& chain_path,
                         bool at_least, const std::string& report_path,
                         const SolveOptions& solve, const std::string& command) {
    Digraph d = load_digraph(in_path);
    std::ifstream cin_f(chain_path);
    if (!cin_f) throw ParseError("cannot open " + chain_path);
    json j = json::parse(cin_f, nullptr, false);
    if (j.is_discarded()) throw ParseError("chain is not valid JSON");

    BagChain chain;
    chain.c = j.value("c", 0);
    chain.beta = j.value("beta", 0);
    for (auto& bag : j.value("bags", json::array())) chain.bags.push_back(bag.get<VertexSet>());

    Reporter rep;
    rep.run("bag-chain", [&]() -> json {
        auto res = verify_bag_chain(d, chain, at_least ? BagMode::AtLeast : BagMode::Exact, solve);
        if (!res.ok) throw Error(res.reason);
        return {{"length", chain.bags.size()}};
    });
    emit(finish_report(command, rep, std::nullopt), report_path);
    return exit_code(rep);
}

// --- exact --------------------------------------------------------------------

int cmd_exact(const std::string& what, const std::string& in_path,
              const std::string& report_path, const SolveOptions& solve,
              const std::string& command) {
    Digraph d = load_digraph(in_path);
    Reporter rep;
    rep.run(what, [&]() -> json {
        if (what == "chi_dir") {
            auto res = dichromatic_number(d, solve);
            return {{"chi_dir", res.value},
                    {"coloring", res.coloring.colors},
                    {"nodes_explored", res.nodes_explored}};
        }
        if (what == "chi") return {{"chi", chromatic_number_undirected(d, solve)}};
        if (what == "omega") {
            auto clique = maximum_underlying_clique(d);
            return {{"omega", clique.size()}, {"witness", clique}};
        }
        if (what == "alpha") {
            auto stable = maximum_independent_set(d);
            return {{"alpha", stable.size()}, {"witness", stable}};
        }
        throw BadParameter("unknown invariant " + what);
    });
    emit(finish_report(command, rep, std::nullopt), report_path);
    return exit_code(rep);
}

// --- pattern ---------------------------------------------------------------------

int cmd_pattern(const std::string& pattern_text, const std::string& in_path, bool subgraph_mode,
                const std::string& expect, const std::string& report_path,
                const std::string& command) {
    Digraph d = load_digraph(in_path);
    Pattern p = parse_pattern(pattern_text);

    Reporter rep;
    rep.run(pattern_text, [&]() -> json {
        auto e = subgraph_mode ? find_subgraph(d, p) : find_induced(d, p);
        json w;
        w["found"] = e.has_value();
        w["mode"] = subgraph_mode ? "subgraph" : "induced";
        if (e) w["embedding"] = e->map;
        if (expect == "found" && !e) throw Error("pattern expected but absent");
        if (expect == "absent" && e) throw Error("pattern found but expected absent");
        return w;
    });
    emit(finish_report(command, rep, std::nullopt), report_path);
    return exit_code(rep);
}

// --- color -----------------------------------------------------------------------

int cmd_color_broomfree(const std::string& in_path, const std::string& b_text,
                        const std::string& bp_text, int t, const std::string& trace_path,
                        const std::string& out_path, const std::string& report_path,
                        const std::string& command) {
    Digraph d = load_digraph(in_path);
    Pattern b = parse_pattern(b_text);
    Pattern bp = parse_pattern(bp_text);

    Reporter rep;
    rep.run("broomfree", [&]() -> json {
        auto res = dicolor_broom_free(d, b, bp, t);
        if (!trace_path.empty()) {
            std::ofstream out(trace_path);
            out << res.trace_json << "\n";
        }
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            json jc = {{"colors", res.coloring.colors}, {"k", res.coloring.k}};
            out << jc.dump(2) << "\n";
        }
        return {{"colors_used", res.coloring.k}, {"bound", res.bound}};
    });
    emit(finish_report(command, rep, std::nullopt), report_path);
    return exit_code(rep);
}

int cmd_color_exact(const std::string& in_path, const std::string& out_path,
                    const std::string& report_path, const SolveOptions& solve,
                    const std::string& command) {
    Digraph d = load_digraph(in_path);
    Reporter rep;
    rep.run("exact-coloring", [&]() -> json {
        auto res = dichromatic_number(d, solve);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            json jc = {{"colors", res.coloring.colors}, {"k", res.coloring.k}};
            out << jc.dump(2) << "\n";
        }
        return {{"chi_dir", res.value}, {"nodes_explored", res.nodes_explored}};
    });
    emit(finish_report(command, rep, std::nullopt), report_path);
    return exit_code(rep);
}

// --- pmct ------------------------------------------------------------------------

int cmd_pmct(const std::string& in_path, const std::string& report_path,
             const std::string& command) {
    Digraph d = load_digraph(in_path);
    Reporter rep;
    rep.run("pmct", [&]() -> json {
        Pmct p = find_pmct(d);
        return {{"K", p.K}, {"P", p.P}, {"size", p.C().size()}};
    });
    emit(finish_report(command, rep, std::nullopt), report_path);
    return exit_code(rep);
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"digraph dicoloring toolkit"};
    app.require_subcommand(1);
    std::string command = join_args(argc, argv);

    SolveOptions solve;
    long long time_limit_ms = 0; // informational; node budget is the hard cap
    app.add_option("--max-nodes", solve.max_nodes, "search node budget")
        ->capture_default_str();
    app.add_option("--time-limit-ms", time_limit_ms,
                   "soft time limit hint recorded in reports");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a construction");
    std::string gen_family, gen_order = "lex", gen_out, gen_format = "el";
    int gen_n = 0, gen_k = 2;
    long long gen_cap = 1'000'000;
    gen->add_option("family", gen_family, "f7 | f5 | shift")->required();
    gen->add_option("--n", gen_n, "index range upper bound")->required();
    gen->add_option("--k", gen_k, "tuple length (shift only)");
    gen->add_option("--order", gen_order, "lex | random:<seed>");
    gen->add_option("--out", gen_out, "output file (default stdout)");
    gen->add_option("--format", gen_format, "el | dot");
    gen->add_option("--max-vertices", gen_cap, "refuse constructions above this size");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string ver_target, ver_in, ver_order = "lex", ver_report, ver_cert, ver_chain;
    int ver_n = 0;
    bool ver_all = false, ver_at_least = false;
    std::vector<std::string> ver_claims;
    verify->add_option("target", ver_target, "f7 | f5 | nice-set | bag-chain")->required();
    verify->add_option("--n", ver_n, "construction size");
    verify->add_option("--in", ver_in, "input file");
    verify->add_option("--order", ver_order, "lex | random:<seed>");
    verify->add_flag("--all", ver_all, "run every claim");
    verify->add_option("--claim", ver_claims, "claim ids (repeatable)");
    verify->add_option("--report", ver_report, "report file (default stdout)");
    verify->add_option("--cert", ver_cert, "nice-set certificate JSON");
    verify->add_option("--chain", ver_chain, "bag chain JSON");
    verify->add_flag("--at-least", ver_at_least, "bag mode: chi_dir >= beta");

    // exact
    auto* exact = app.add_subcommand("exact", "compute an exact invariant");
    std::string ex_what, ex_in, ex_report;
    exact->add_option("what", ex_what, "chi_dir | chi | omega | alpha")->required();
    exact->add_option("--in", ex_in, "edge-list file")->required();
    exact->add_option("--report", ex_report, "report file (default stdout)");

    // pattern
    auto* pattern = app.add_subcommand("pattern", "search for a pattern");
    std::string pat_text, pat_in, pat_expect, pat_report;
    bool pat_subgraph = false, pat_induced = false;
    pattern->add_option("--find", pat_text, "pattern tag")->required();
    pattern->add_option("--in", pat_in, "edge-list file")->required();
    pattern->add_flag("--subgraph", pat_subgraph, "arcs-only matching");
    pattern->add_flag("--induced", pat_induced, "induced matching (default)");
    pattern->add_option("--expect", pat_expect, "found | absent");
    pattern->add_option("--report", pat_report, "report file (default stdout)");

    // color
    auto* color = app.add_subcommand("color", "produce a dicoloring");
    std::string col_algo, col_in, col_b, col_bp, col_trace, col_out, col_report;
    int col_t = 0;
    color->add_option("algorithm", col_algo, "broomfree | exact")->required();
    color->add_option("--in", col_in, "edge-list file")->required();
    color->add_option("--b", col_b, "first broom tag");
    color->add_option("--bprime", col_bp, "second broom tag");
    color->add_option("--t", col_t, "transitive-tournament cap recorded in the trace");
    color->add_option("--trace", col_trace, "trace JSON file");
    color->add_option("--out", col_out, "coloring JSON file");
    color->add_option("--report", col_report, "report file (default stdout)");

    // pmct
    auto* pmct = app.add_subcommand("pmct", "find a path-minimizing closed tournament");
    std::string pm_in, pm_report;
    pmct->add_option("--in", pm_in, "edge-list file")->required();
    pmct->add_option("--report", pm_report, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) return cmd_gen(gen_family, gen_n, gen_k, gen_order, gen_out, gen_format,
                                 gen_cap);
        if (*verify) {
            if (ver_target == "f7" || ver_target == "f5") {
                if (ver_in.empty() && ver_n == 0)
                    throw BadParameter("verify needs --n or --in");
                std::vector<std::string> claims = ver_all ? std::vector<std::string>{} : ver_claims;
                if (!ver_all && claims.empty())
                    throw BadParameter("choose --all or at least one --claim");
                return cmd_verify_family(ver_target, ver_n, ver_in, ver_order, claims, ver_report,
                                         solve, command);
            }
            if (ver_target == "nice-set") {
                if (ver_in.empty() || ver_cert.empty())
                    throw BadParameter("nice-set verification needs --in and --cert");
                return cmd_verify_nice_set(ver_in, ver_cert, ver_report, command);
            }
            if (ver_target == "bag-chain") {
                if (ver_in.empty() || ver_chain.empty())
                    throw BadParameter("bag-chain verification needs --in and --chain");
                return cmd_verify_bag_chain(ver_in, ver_chain, ver_at_least, ver_report, solve,
                                            command);
            }
            throw BadParameter("unknown verify target " + ver_target);
        }
        if (*exact) return cmd_exact(ex_what, ex_in, ex_report, solve, command);
        if (*pattern) {
            if (pat_subgraph && pat_induced)
                throw BadParameter("choose one of --induced / --subgraph");
            return cmd_pattern(pat_text, pat_in, pat_subgraph, pat_expect, pat_report, command);
        }
        if (*color) {
            if (col_algo == "broomfree") {
                if (col_b.empty() || col_bp.empty())
                    throw BadParameter("broomfree needs --b and --bprime");
                return cmd_color_broomfree(col_in, col_b, col_bp, col_t, col_trace, col_out,
                                           col_report, command);
            }
            if (col_algo == "exact")
                return cmd_color_exact(col_in, col_out, col_report, solve, command);
            throw BadParameter("unknown coloring algorithm " + col_algo);
        }
        if (*pmct) return cmd_pmct(pm_in, pm_report, command);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
