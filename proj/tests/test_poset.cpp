#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "posetmerge/merging.hpp"
#include "posetmerge/plane_partition.hpp"
#include "posetmerge/poset.hpp"
#include "testutil.hpp"

using namespace posetmerge;

TEST_CASE("chains and antichains") {
    const Poset empty = make_chain(0);
    REQUIRE(empty.size() == 0);
    REQUIRE(make_antichain(0).size() == 0);

    const Poset one = make_chain(1);
    REQUIRE(one.size() == 1);
    REQUIRE(one.leq(0, 0));

    const Poset c4 = make_chain(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) REQUIRE(c4.leq(i, j) == (i <= j));
    REQUIRE(c4.label(0) == "c1");
    REQUIRE(c4.label(3) == "c4");

    const Poset a3 = make_antichain(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) REQUIRE(a3.leq(i, j) == (i == j));

    // a 1-antichain is a 1-chain
    REQUIRE(make_antichain(1).rows() == make_chain(1).rows());
}

TEST_CASE("relation classification") {
    SECTION("identity matrix is an antichain poset") {
        const auto c = classify_relation({"x", "y", "z"}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        REQUIRE(c.reflexive);
        REQUIRE(c.transitive);
        REQUIRE(c.antisymmetric);
        REQUIRE(c.poset.has_value());
    }
    SECTION("a symmetric pair is a quasi-order but no poset") {
        const auto c = classify_relation({"x", "y"}, {{1, 1}, {1, 1}});
        REQUIRE(c.quasi_order.has_value());
        REQUIRE(!c.antisymmetric);
        REQUIRE(!c.poset.has_value());
    }
    SECTION("missing composite is rejected") {
        const auto c =
            classify_relation({"x", "y", "z"}, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
        REQUIRE(!c.transitive);
        REQUIRE(!c.quasi_order.has_value());
    }
    SECTION("non-square matrix") {
        REQUIRE_THROWS_AS(classify_relation({"x", "y"}, {{1, 0, 1}, {0, 1, 0}}), DomainError);
    }
    SECTION("revalidating a constructed poset reproduces its classification") {
        const Poset c3 = make_chain(3);
        std::vector<std::vector<bool>> rel(3, std::vector<bool>(3));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) rel[i][j] = c3.leq(i, j);
        const auto c = classify_relation(c3.labels(), rel);
        REQUIRE(c.poset.has_value());
        REQUIRE(c.poset->same_relation(c3));
    }
}

TEST_CASE("hasse edges") {
    const auto chain_edges = hasse_edges(make_chain(3));
    REQUIRE(chain_edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
    REQUIRE(hasse_edges(make_antichain(4)).empty());

    // the merged order of the partition [[2,1],[1,0]] covers in an X shape
    const Merging m = pp_to_merging(PlanePartition{2, 2, 2, {{2, 1}, {1, 0}}});
    const auto mp = merged_poset(m);
    REQUIRE(mp.has_value());
    auto edges = hasse_edges(*mp);
    std::vector<std::pair<std::string, std::string>> named;
    for (auto [a, b] : edges) named.emplace_back(mp->label(a), mp->label(b));
    std::sort(named.begin(), named.end());
    REQUIRE(named == std::vector<std::pair<std::string, std::string>>{
                         {"a1", "a2"}, {"a1", "b2"}, {"b1", "a2"}, {"b1", "b2"}});
}

TEST_CASE("hasse edges plus closure reconstruct the poset") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        const Poset p = testutil::random_poset(1 + trial % 8, rng);
        std::vector<Bitset> rows(p.size());
        for (auto [a, b] : hasse_edges(p)) rows[a].set(b);
        REQUIRE(reflexive_transitive_closure(std::move(rows)) == p.rows());
    }
}

TEST_CASE("lattice check") {
    for (std::size_t n = 0; n <= 10; ++n) {
        const auto rep = lattice_check(make_chain(n));
        REQUIRE(rep.is_lattice);
        REQUIRE(rep.is_distributive.has_value());
        REQUIRE(*rep.is_distributive);
        REQUIRE(rep.witnesses.empty());
    }

    SECTION("two incomparable elements without bounds") {
        const auto rep = lattice_check(make_antichain(2));
        REQUIRE(!rep.is_lattice);
        REQUIRE(!rep.is_distributive.has_value());
        REQUIRE(!rep.witnesses.empty());
    }

    SECTION("four-element poset with two maximal and two minimal elements") {
        // a < c, a < d, b < c, b < d: meets and joins of {c,d} / {a,b} are ambiguous
        const auto c = classify_relation(
            {"a", "b", "c", "d"},
            {{1, 0, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        REQUIRE(c.poset.has_value());
        const auto rep = lattice_check(*c.poset);
        REQUIRE(!rep.is_lattice);
    }

    SECTION("diamond with three atoms is a lattice but not distributive") {
        // bottom 0, atoms x,y,z, top 1
        std::vector<std::string> labels{"0", "x", "y", "z", "1"};
        std::vector<std::vector<bool>> rel(5, std::vector<bool>(5, false));
        for (int i = 0; i < 5; ++i) rel[i][i] = true;
        for (int i = 1; i <= 3; ++i) {
            rel[0][i] = true;
            rel[i][4] = true;
        }
        rel[0][4] = true;
        const auto c = classify_relation(labels, rel);
        REQUIRE(c.poset.has_value());
        const auto rep = lattice_check(*c.poset);
        REQUIRE(rep.is_lattice);
        REQUIRE(!*rep.is_distributive);
        // every distributivity witness violates the law when re-checked
        for (const auto& w : rep.witnesses) {
            REQUIRE(w.law == "distributivity");
            const auto x = c.poset->index_of(w.elements[0]);
            const auto y = c.poset->index_of(w.elements[1]);
            const auto z = c.poset->index_of(w.elements[2]);
            const auto lhs = meet(*c.poset, x, *join(*c.poset, y, z));
            const auto rhs = join(*c.poset, *meet(*c.poset, x, y), *meet(*c.poset, x, z));
            REQUIRE(lhs != rhs);
        }
    }

    SECTION("meet/join witnesses violate the law when re-checked") {
        const auto rep = lattice_check(make_antichain(2));
        for (const auto& w : rep.witnesses) {
            const auto a = std::size_t{0};
            const auto b = std::size_t{1};
            if (w.law == "meet") REQUIRE(!meet(make_antichain(2), a, b).has_value());
            if (w.law == "join") REQUIRE(!join(make_antichain(2), a, b).has_value());
        }
    }
}

TEST_CASE("poset isomorphism") {
    REQUIRE(poset_isomorphic(make_chain(5), make_chain(5)).isomorphic);
    REQUIRE(!poset_isomorphic(make_chain(3), make_antichain(3)).isomorphic);
    REQUIRE(!poset_isomorphic(make_chain(3), make_chain(4)).isomorphic);

    SECTION("witness is an order isomorphism") {
        const Poset b2 = boolean_lattice(2);
        const Poset diamond = *classify_relation({"p", "q", "r", "s"},
                                                 {{1, 1, 1, 1},
                                                  {0, 1, 0, 1},
                                                  {0, 0, 1, 1},
                                                  {0, 0, 0, 1}})
                                   .poset;
        const auto res = poset_isomorphic(b2, diamond);
        REQUIRE(res.isomorphic);
        for (std::size_t i = 0; i < b2.size(); ++i)
            for (std::size_t j = 0; j < b2.size(); ++j) {
                const auto fi = diamond.index_of(res.witness.at(b2.label(i)));
                const auto fj = diamond.index_of(res.witness.at(b2.label(j)));
                REQUIRE(b2.leq(i, j) == diamond.leq(fi, fj));
            }
    }

    SECTION("reflexive and symmetric on random posets") {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 10; ++trial) {
            const Poset p = testutil::random_poset(2 + trial % 6, rng);
            const Poset q = testutil::random_poset(2 + trial % 6, rng);
            REQUIRE(poset_isomorphic(p, p).isomorphic);
            REQUIRE(poset_isomorphic(p, q).isomorphic == poset_isomorphic(q, p).isomorphic);
        }
    }

    SECTION("size cap") {
        REQUIRE_THROWS_AS(poset_isomorphic(make_chain(41), make_chain(41)), CapacityError);
    }
}

TEST_CASE("boolean lattice") {
    const Poset b3 = boolean_lattice(3);
    REQUIRE(b3.size() == 8);
    REQUIRE(b3.label(0) == "{}");
    const auto rep = lattice_check(b3);
    REQUIRE(rep.is_lattice);
    REQUIRE(*rep.is_distributive);
}
