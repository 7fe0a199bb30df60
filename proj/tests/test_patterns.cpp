#include "doctest.h"

#include "dichroma/constructions.hpp"
#include "dichroma/patterns.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace dichroma;
using test_helpers::random_digraph;
using test_helpers::random_tournament;

TEST_CASE("pattern builders use the documented numbering") {
    Pattern p3 = build({DirPathTag{3}});
    CHECK(p3.graph.n() == 3);
    CHECK(p3.graph.has_arc(0, 1));
    CHECK(p3.graph.has_arc(1, 2));
    CHECK(p3.graph.arc_count() == 2);

    Pattern broom = build({BroomTag{2, EdgeDir::Forward, EdgeDir::Forward, LeafDir::Out}});
    CHECK(broom.graph.n() == 5);
    CHECK(broom.graph.arc_count() == 4);
    CHECK(broom.graph.has_arc(0, 1));
    CHECK(broom.graph.has_arc(1, 2));
    CHECK(broom.graph.has_arc(2, 3));
    CHECK(broom.graph.has_arc(2, 4));

    Pattern it = build({InTriangleTag{}});
    CHECK(it.graph.n() == 4);
    CHECK(it.graph.has_arc(0, 3));
    CHECK(it.graph.has_arc(1, 3));
    CHECK(it.graph.has_arc(2, 3));
    CHECK(!is_acyclic(it.graph));

    Pattern ot = build({OutTriangleTag{}});
    CHECK(reverse(it.graph) == Digraph::from_edge_list(
                                   4, {{1, 0}, {2, 1}, {0, 2}, {3, 0}, {3, 1}, {3, 2}}));
    CHECK(ot.graph.has_arc(3, 0));

    Pattern star = build({StarTag{2, 3}});
    CHECK(star.graph.n() == 6);
    CHECK(star.graph.in_degree(0) == 2);
    CHECK(star.graph.out_degree(0) == 3);

    CHECK_THROWS_AS(build({BroomTag{0, EdgeDir::Forward, EdgeDir::Forward, LeafDir::Out}}),
                    BadParameter);
    CHECK_THROWS_AS(build({StarTag{0, 0}}), BadParameter);
    CHECK_THROWS_AS(build({TTkTag{0}}), BadParameter);
}

TEST_CASE("pattern tag strings parse and round trip") {
    auto same_graph = [](const std::string& text) {
        Pattern p = parse_pattern(text);
        Pattern q = parse_pattern(format_pattern(p.tag));
        CHECK(p.graph == q.graph);
        return p;
    };

    CHECK(same_graph("tt:5").graph == transitive_tournament(5));
    CHECK(same_graph("path:->-><-").graph.arc_count() == 3);
    CHECK(same_graph("star:in=2,out=3").graph.n() == 6);
    same_graph("broom:r=3,v12=fwd,v23=bwd,leaf=in");
    CHECK(same_graph("c3").graph == cyclic_triangle());
    CHECK(same_graph("it").graph.n() == 4);
    CHECK(same_graph("delta:1,1,tt:2").graph ==
          triangle_join(Digraph(1), Digraph(1), transitive_tournament(2)));
    CHECK(same_graph("join:c3,tt:2").graph ==
          join_forward(cyclic_triangle(), transitive_tournament(2)));
    CHECK(same_graph("rk1p:2,(path:->->)").graph.n() == 5);
    CHECK(same_graph("delta:(star:in=1,out=1),1,1").graph.n() == 5);

    // a directed path spelled with arrows normalizes to the dirpath tag
    Pattern p = parse_pattern("path:->->");
    CHECK(std::holds_alternative<DirPathTag>(p.tag.v));

    CHECK_THROWS_AS(parse_pattern("nope:1"), ParseError);
    CHECK_THROWS_AS(parse_pattern("path:=>"), ParseError);
    CHECK_THROWS_AS(parse_pattern("broom:r=1"), ParseError);
    CHECK_THROWS_AS(parse_pattern("delta:1,1"), ParseError);
}

TEST_CASE("induced search distinguishes chords") {
    Pattern p3 = build({DirPathTag{3}});
    CHECK(!find_induced(cyclic_triangle(), p3));
    CHECK(!find_induced(transitive_tournament(3), p3));
    auto sub = find_subgraph(transitive_tournament(3), p3);
    REQUIRE(sub.has_value());
    CHECK(sub->map == std::vector<VertexId>{0, 1, 2});

    // the cyclic triangle with a dominated apex contains the in-triangle
    Digraph host = join_forward(cyclic_triangle(), Digraph(1));
    CHECK(find_subgraph(host, build({InTriangleTag{}})).has_value());

    CHECK(!find_subgraph(build_f5(7).digraph, build({InTriangleTag{}})).has_value());
}

TEST_CASE("matcher agrees with the all-injections oracle") {
    std::vector<Pattern> patterns;
    patterns.push_back(build({CyclicTriangleTag{}}));
    patterns.push_back(build({InTriangleTag{}}));
    patterns.push_back(build({OutTriangleTag{}}));
    patterns.push_back(build({DirPathTag{2}}));
    patterns.push_back(build({DirPathTag{3}}));
    patterns.push_back(build({DirPathTag{4}}));
    patterns.push_back(build({OrientedPathTag{"-><-"}}));
    patterns.push_back(build({OrientedPathTag{"<-->"}}));
    patterns.push_back(build({StarTag{1, 2}}));
    patterns.push_back(build({StarTag{3, 0}}));
    patterns.push_back(build({TTkTag{3}}));
    patterns.push_back(build({TTkTag{4}}));
    patterns.push_back(build({RK1PlusTag{1, std::make_shared<PatternTag>(PatternTag{DirPathTag{2}})}}));

    std::mt19937_64 rng(67);
    for (int iter = 0; iter < 300; ++iter) {
        Digraph host = random_digraph(rng, 4 + int(rng() % 4), 0.25 + 0.5 * (iter % 3) / 2.0);
        const Pattern& p = patterns[iter % patterns.size()];
        CHECK(find_induced(host, p).has_value() ==
              oracles::naive_has_embedding(host, p.graph, true));
        CHECK(find_subgraph(host, p).has_value() ==
              oracles::naive_has_embedding(host, p.graph, false));
    }
}

TEST_CASE("embeddings returned by the matcher check out") {
    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 100; ++iter) {
        Digraph host = random_digraph(rng, 5 + int(rng() % 3), 0.5);
        Pattern p = build({DirPathTag{2 + int(rng() % 3)}});
        if (auto e = find_induced(host, p)) CHECK(check_embedding(host, p, *e));
        if (auto e = find_subgraph(host, p)) CHECK(check_embedding(host, p, *e));
    }
}

TEST_CASE("freeness of pattern collections") {
    CHECK(free_of_all(transitive_tournament(6), {build({CyclicTriangleTag{}})}).free);
    CHECK(free_of_all(cyclic_triangle(), {build({TTkTag{3}})}).free);

    auto res = free_of_all(cyclic_triangle(),
                           {build({TTkTag{3}}), build({CyclicTriangleTag{}})});
    CHECK(!res.free);
    CHECK(res.violating_index == 1);
    REQUIRE(res.witness.has_value());
    CHECK(check_embedding(cyclic_triangle(), build({CyclicTriangleTag{}}), *res.witness));
}

TEST_CASE("freeness is reversal-invariant") {
    std::mt19937_64 rng(73);
    std::vector<Pattern> patterns = {
        build({BroomTag{1, EdgeDir::Forward, EdgeDir::Forward, LeafDir::Out}}),
        build({BroomTag{2, EdgeDir::Backward, EdgeDir::Forward, LeafDir::In}}),
        build({StarTag{1, 2}}),
        build({DirPathTag{3}}),
        build({InTriangleTag{}}),
    };
    for (int iter = 0; iter < 150; ++iter) {
        Digraph d = random_digraph(rng, 5 + int(rng() % 4), 0.4);
        const Pattern& p = patterns[iter % patterns.size()];
        CHECK(is_free(d, p) == is_free(reverse(d), reverse(p)));
    }
}

TEST_CASE("hero recognizer accepts the grammar") {
    for (int k = 1; k <= 6; ++k) {
        auto deriv = is_hero_in_tournaments(transitive_tournament(k));
        REQUIRE(deriv.has_value());
        CHECK(verify_hero_derivation(transitive_tournament(k), *deriv));
    }

    auto c3 = is_hero_in_tournaments(cyclic_triangle());
    REQUIRE(c3.has_value());
    CHECK(c3->rule == HeroDerivation::Rule::DeltaHeroFirst);
    CHECK(verify_hero_derivation(cyclic_triangle(), *c3));

    Digraph d131 = triangle_join(Digraph(1), transitive_tournament(3), Digraph(1));
    auto deriv131 = is_hero_in_tournaments(d131);
    REQUIRE(deriv131.has_value());
    CHECK(verify_hero_derivation(d131, *deriv131));

    Digraph bad = triangle_join(transitive_tournament(2), transitive_tournament(2),
                                transitive_tournament(2));
    CHECK(!is_hero_in_tournaments(bad).has_value());
}

TEST_CASE("hero recognizer rejects non-tournaments and big inputs") {
    CHECK_THROWS_AS(is_hero_in_tournaments(Digraph(2)), NotATournament);
    CHECK_THROWS_AS(is_hero_in_tournaments(transitive_tournament(10)), BudgetExceeded);
}

TEST_CASE("hero status is invariant under arc reversal on small tournaments") {
    for (long long code = 0; code < (1 << 6); ++code) {
        Digraph t(4);
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) {
                if (code & (1 << bit)) t.add_arc(u, v);
                else t.add_arc(v, u);
                ++bit;
            }
        bool hero = is_hero_in_tournaments(t).has_value();
        CHECK(hero == is_hero_in_tournaments(reverse(t)).has_value());
    }
}

TEST_CASE("broom types and their reversal pairing") {
    auto broom = [](EdgeDir d12, EdgeDir d23, LeafDir leaf) {
        return build({BroomTag{2, d12, d23, leaf}});
    };
    CHECK(classify_broom_type(broom(EdgeDir::Forward, EdgeDir::Forward, LeafDir::Out)) == 1);
    CHECK(classify_broom_type(broom(EdgeDir::Forward, EdgeDir::Backward, LeafDir::In)) == 2);
    CHECK(classify_broom_type(broom(EdgeDir::Backward, EdgeDir::Forward, LeafDir::Out)) == 3);
    CHECK(classify_broom_type(broom(EdgeDir::Backward, EdgeDir::Backward, LeafDir::Out)) == 4);
    // leaf direction never affects the type
    CHECK(classify_broom_type(broom(EdgeDir::Forward, EdgeDir::Forward, LeafDir::In)) == 1);

    auto opposing_side = [](int type) { return type == 1 || type == 3; };
    for (EdgeDir d12 : {EdgeDir::Forward, EdgeDir::Backward})
        for (EdgeDir d23 : {EdgeDir::Forward, EdgeDir::Backward})
            for (LeafDir leaf : {LeafDir::In, LeafDir::Out}) {
                Pattern b = broom(d12, d23, leaf);
                int t = classify_broom_type(b);
                int tr = classify_broom_type(reverse(b));
                CHECK(opposing_side(t) != opposing_side(tr));
            }

    CHECK_THROWS_AS(classify_broom_type(build({TTkTag{3}})), NotValidOrientation);
}

TEST_CASE("derivations re-verify after perturbation fails") {
    Digraph c3 = cyclic_triangle();
    auto deriv = is_hero_in_tournaments(c3);
    REQUIRE(deriv.has_value());
    // verifying against a different tournament must fail
    CHECK(!verify_hero_derivation(transitive_tournament(3), *deriv));
}
