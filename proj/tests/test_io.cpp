#include <catch2/catch_amalgamated.hpp>

#include "posetmerge/io.hpp"
#include "posetmerge/plane_partition.hpp"

using namespace posetmerge;

TEST_CASE("poset json") {
    const Poset c3 = make_chain(3);
    const json j = poset_to_json(c3);
    REQUIRE(j.at("elements") == json({"c1", "c2", "c3"}));
    const Poset back = poset_from_json(j);
    REQUIRE(back.same_relation(c3));

    SECTION("rejects broken relations") {
        json bad = j;
        bad["le"][0][0] = 0; // not reflexive
        REQUIRE_THROWS_AS(poset_from_json(bad), ParseError);
        REQUIRE_THROWS_AS(poset_from_json(json{{"elements", {"x"}}}), ParseError);
    }
    SECTION("quasi-orders that are not posets load as quasi-orders only") {
        const json sym{{"elements", {"x", "y"}}, {"le", {{1, 1}, {1, 1}}}};
        REQUIRE_NOTHROW(quasi_order_from_json(sym));
        REQUIRE_THROWS_AS(poset_from_json(sym), ParseError);
    }
}

TEST_CASE("context json and cxt") {
    const FormalContext ctx = contraordinal_scale(make_chain(3));
    SECTION("json roundtrip") {
        const FormalContext back = context_from_json(context_to_json(ctx));
        REQUIRE(back.objects() == ctx.objects());
        REQUIRE(back.attributes() == ctx.attributes());
        for (std::size_t g = 0; g < 3; ++g)
            for (std::size_t m = 0; m < 3; ++m)
                REQUIRE(back.incident(g, m) == ctx.incident(g, m));
    }
    SECTION("cxt golden text") {
        REQUIRE(context_to_cxt(ctx) == "B\n\n3\n3\n\nc1\nc2\nc3\nc1\nc2\nc3\n.XX\n..X\n...\n");
    }
    SECTION("cxt roundtrip") {
        const FormalContext back = context_from_cxt(context_to_cxt(ctx));
        REQUIRE(back.objects() == ctx.objects());
        for (std::size_t g = 0; g < 3; ++g)
            for (std::size_t m = 0; m < 3; ++m)
                REQUIRE(back.incident(g, m) == ctx.incident(g, m));
    }
    SECTION("cxt rejects malformed input") {
        REQUIRE_THROWS_AS(context_from_cxt(std::string("A\n1\n1\ng\nm\nX\n")), ParseError);
        REQUIRE_THROWS_AS(context_from_cxt(std::string("B\n1\n1\ng\nm\nXX\n")), ParseError);
        REQUIRE_THROWS_AS(context_from_cxt(std::string("B\n1\n1\ng\nm\n?\n")), ParseError);
    }
}

TEST_CASE("merging json") {
    const Merging m = pp_to_merging(PlanePartition{2, 2, 2, {{2, 1}, {1, 0}}});
    const json j = merging_to_json(m);
    REQUIRE(j.at("proper") == true);
    REQUIRE(j.at("r") == json::parse("[[0,1]]"));
    REQUIRE(j.at("s") == json::parse("[[0,1]]"));
    const Merging back = merging_from_json(j);
    REQUIRE(back.same_relations(m));
    REQUIRE(back.is_proper_merging());

    SECTION("rejects pairs that are not a merging") {
        json bad = j;
        bad["r"] = json::parse("[[0,0]]"); // row {b1} is not an intent
        REQUIRE_THROWS_AS(merging_from_json(bad), ParseError);
    }
    SECTION("rejects an inconsistent proper flag") {
        json bad = j;
        bad["proper"] = false;
        REQUIRE_THROWS_AS(merging_from_json(bad), ParseError);
    }
    SECTION("every enumerated merging roundtrips losslessly") {
        for (bool proper : {false, true})
            for (const auto& mg :
                 enumerate_mergings(make_antichain(2, "a"), make_chain(2, "c"), proper)) {
                const Merging back = merging_from_json(merging_to_json(mg));
                REQUIRE(back.same_relations(mg));
                REQUIRE(back.p.same_relation(mg.p));
                REQUIRE(back.q.same_relation(mg.q));
                REQUIRE(back.proper == mg.proper);
            }
    }
}

TEST_CASE("plane partition json") {
    const PlanePartition pp{2, 3, 2, {{2, 1, 1}, {1, 1, 0}}};
    const PlanePartition back = pp_from_json(pp_to_json(pp));
    REQUIRE(back == pp);
    SECTION("descriptive rejection") {
        json bad = pp_to_json(pp);
        bad["parts"][1][0] = 9;
        try {
            pp_from_json(bad);
            FAIL("expected rejection");
        } catch (const DomainError& e) {
            REQUIRE(std::string(e.what()).find("(2,1)") != std::string::npos);
        }
    }
}

TEST_CASE("coloring json") {
    const MonotoneColoring g{2, 3, {1, 2}, {2, 3}};
    REQUIRE(coloring_from_json(coloring_to_json(g)) == g);
    json bad = coloring_to_json(g);
    bad["v1"][0] = 9;
    REQUIRE_THROWS_AS(coloring_from_json(bad), DomainError);
}

TEST_CASE("galois json shape") {
    const auto gs = enumerate_galois_chains(2, 2);
    REQUIRE(gs.size() == 2);
    const json j = galois_to_json(gs[0]);
    REQUIRE(j.contains("phi"));
    REQUIRE(j.contains("psi"));
    REQUIRE(j.at("phi").size() == 2);
    REQUIRE(j.at("psi").size() == 2);
    for (const auto& [from, to] : j.at("phi").items()) {
        REQUIRE(from.substr(0, 1) == "a");
        REQUIRE(to.get<std::string>().substr(0, 1) == "b");
    }
}

TEST_CASE("dot output") {
    const Merging m = pp_to_merging(PlanePartition{2, 2, 2, {{2, 1}, {1, 0}}});
    const std::string dot = merged_order_dot(m, "m0");
    REQUIRE(dot.find("digraph m0 {") != std::string::npos);
    REQUIRE(dot.find("\"a1\" [shape=circle, color=green]") != std::string::npos);
    REQUIRE(dot.find("\"b1\" [shape=box, color=black]") != std::string::npos);
    REQUIRE(dot.find("\"a1\" -> \"a2\";") != std::string::npos);
    REQUIRE(dot.find("\"b1\" -> \"a2\";") != std::string::npos);

    SECTION("improper mergings are rejected") {
        const Poset p = make_antichain(1, "a"), q = make_antichain(1, "b");
        CrossRelation r(p.labels(), q.labels());
        r.set(0, 0);
        CrossRelation s(q.labels(), p.labels());
        s.set(0, 0);
        REQUIRE_THROWS_AS(merged_order_dot(classify_merging(p, q, r, s)), DomainError);
    }
}
