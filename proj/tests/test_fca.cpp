#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "posetmerge/concept_lattice.hpp"
#include "posetmerge/context.hpp"
#include "posetmerge/poset.hpp"
#include "testutil.hpp"

using namespace posetmerge;

namespace {

Bitset labels_to_objects(const FormalContext& ctx, std::initializer_list<const char*> ls) {
    std::vector<std::string> v(ls.begin(), ls.end());
    return object_set(ctx, v);
}

Bitset labels_to_attributes(const FormalContext& ctx, std::initializer_list<const char*> ls) {
    std::vector<std::string> v(ls.begin(), ls.end());
    return attribute_set(ctx, v);
}

} // namespace

TEST_CASE("scales") {
    SECTION("ordinal scale of a chain is triangular") {
        const FormalContext k = ordinal_scale(make_chain(4));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) REQUIRE(k.incident(i, j) == (i <= j));
    }
    SECTION("ordinal scale of an antichain is the identity") {
        const FormalContext k = ordinal_scale(make_antichain(3));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) REQUIRE(k.incident(i, j) == (i == j));
    }
    SECTION("contraordinal scale of a chain is strictly upper triangular") {
        const FormalContext k = contraordinal_scale(make_chain(4));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) REQUIRE(k.incident(i, j) == (i < j));
    }
    SECTION("contraordinal scale of an antichain is the complement of the identity") {
        const FormalContext k = contraordinal_scale(make_antichain(3));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) REQUIRE(k.incident(i, j) == (i != j));
    }
    SECTION("1-chain gives the all-false 1x1 incidence") {
        const FormalContext k = contraordinal_scale(make_chain(1));
        REQUIRE(!k.incident(0, 0));
    }
}

TEST_CASE("derivations") {
    const FormalContext cc4 = contraordinal_scale(make_chain(4));
    const FormalContext ca3 = contraordinal_scale(make_antichain(3));

    REQUIRE(derive_objects(cc4, Bitset{}) == Bitset::prefix(4));
    REQUIRE(derive_attributes(cc4, Bitset{}) == Bitset::prefix(4));
    REQUIRE(derive_objects(cc4, labels_to_objects(cc4, {"c2"})) ==
            labels_to_attributes(cc4, {"c3", "c4"}));
    REQUIRE(derive_attributes(cc4, labels_to_attributes(cc4, {"c3"})) ==
            labels_to_objects(cc4, {"c1", "c2"}));
    REQUIRE(derive_objects(ca3, labels_to_objects(ca3, {"a1", "a2"})) ==
            labels_to_attributes(ca3, {"a3"}));
    REQUIRE(derive_attributes(ca3, Bitset::prefix(3)).none());

    REQUIRE_THROWS_AS(object_set(cc4, {"nope"}), DomainError);
}

TEST_CASE("closures") {
    const FormalContext cc4 = contraordinal_scale(make_chain(4));
    const FormalContext ca4 = contraordinal_scale(make_antichain(4));

    REQUIRE(closure_objects(cc4, Bitset{}).none()); // no full column
    REQUIRE(closure_objects(ca4, Bitset::single(0)) == Bitset::single(0));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Bitset s = testutil::random_subset(4, rng);
        const Bitset c = closure_objects(cc4, s);
        REQUIRE(closure_objects(cc4, c) == c); // idempotent
        REQUIRE(s.subset_of(c));               // extensive
    }
}

TEST_CASE("intents and extents") {
    const FormalContext cc4 = contraordinal_scale(make_chain(4));
    // suffixes {c_k..c_n} are intents for every k, including the empty one
    for (std::size_t k = 0; k <= 4; ++k)
        REQUIRE(is_intent(cc4, Bitset::prefix(4) - Bitset::prefix(k)));
    Bitset gappy;
    gappy.set(1);
    gappy.set(3); // {c2, c4}
    REQUIRE(!is_intent(cc4, gappy));

    const FormalContext ca3 = contraordinal_scale(make_antichain(3));
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
        Bitset s;
        for (std::size_t i = 0; i < 3; ++i)
            if ((mask >> i) & 1) s.set(i);
        REQUIRE(is_intent(ca3, s));
        REQUIRE(is_extent(ca3, s));
    }
}

TEST_CASE("concept enumeration") {
    SECTION("contraordinal chain scale gives a chain one longer") {
        for (std::size_t n = 0; n <= 12; ++n) {
            const ConceptLattice l = all_concepts(contraordinal_scale(make_chain(n)));
            REQUIRE(l.size() == n + 1);
            for (std::size_t i = 0; i < l.size(); ++i)
                REQUIRE(l.at(i).extent == Bitset::prefix(i));
        }
        const auto iso =
            poset_isomorphic(all_concepts(contraordinal_scale(make_chain(4))).to_poset(),
                             make_chain(5));
        REQUIRE(iso.isomorphic);
    }
    SECTION("contraordinal antichain scale gives the Boolean lattice") {
        for (std::size_t m = 0; m <= 10; ++m)
            REQUIRE(all_concepts(contraordinal_scale(make_antichain(m))).size() ==
                    (std::size_t{1} << m));
        // not only isomorphic: the canonical concept order and subset labels
        // coincide exactly with the directly built subset lattice
        for (std::size_t m = 0; m <= 4; ++m) {
            const Poset from_ctx =
                all_concepts(contraordinal_scale(make_antichain(m))).to_poset();
            const Poset direct = boolean_lattice(m);
            REQUIRE(from_ctx.labels() == direct.labels());
            REQUIRE(from_ctx.same_relation(direct));
        }
    }
    SECTION("empty context has exactly the concept (empty, empty)") {
        const ConceptLattice l = all_concepts(FormalContext({}, {}, {}));
        REQUIRE(l.size() == 1);
        REQUIRE(l.at(0).extent.none());
        REQUIRE(l.at(0).intent.none());
    }
    SECTION("structural invariants on assorted contexts") {
        std::mt19937_64 rng(123);
        for (int trial = 0; trial < 20; ++trial) {
            const Poset p = testutil::random_poset(1 + trial % 7, rng);
            for (const FormalContext& ctx : {ordinal_scale(p), contraordinal_scale(p)}) {
                const ConceptLattice l = all_concepts(ctx);
                for (std::size_t i = 0; i < l.size(); ++i) {
                    REQUIRE(derive_objects(ctx, l.at(i).extent) == l.at(i).intent);
                    REQUIRE(derive_attributes(ctx, l.at(i).intent) == l.at(i).extent);
                    for (std::size_t j = i + 1; j < l.size(); ++j)
                        REQUIRE(!(l.at(i).extent == l.at(j).extent));
                }
                // closed under intersection of extents; top and bottom present
                for (std::size_t i = 0; i < l.size(); ++i)
                    for (std::size_t j = 0; j < l.size(); ++j)
                        REQUIRE(is_extent(ctx, l.at(i).extent & l.at(j).extent));
                REQUIRE(l.at(l.bottom_index()).extent ==
                        derive_attributes(ctx, Bitset::prefix(ctx.attribute_count())));
                REQUIRE(l.at(l.top_index()).extent == Bitset::prefix(ctx.object_count()));
            }
        }
    }
}

TEST_CASE("galois laws of the derivation pair") {
    std::mt19937_64 rng(20240818);
    for (std::size_t n = 1; n <= 10; ++n) {
        std::vector<FormalContext> contexts;
        contexts.push_back(ordinal_scale(make_chain(n)));
        contexts.push_back(contraordinal_scale(make_chain(n)));
        contexts.push_back(ordinal_scale(make_antichain(n)));
        contexts.push_back(contraordinal_scale(make_antichain(n)));
        for (const auto& ctx : contexts)
            for (int trial = 0; trial < 25; ++trial) {
                const Bitset a1 = testutil::random_subset(n, rng);
                const Bitset a2 = a1 | testutil::random_subset(n, rng);
                REQUIRE(a1.subset_of(closure_objects(ctx, a1)));
                REQUIRE(derive_objects(ctx, a2).subset_of(derive_objects(ctx, a1)));
                const Bitset d = derive_objects(ctx, a1);
                REQUIRE(derive_objects(ctx, derive_attributes(ctx, d)) == d);
            }
    }
}

TEST_CASE("dual context") {
    const FormalContext k = contraordinal_scale(make_chain(3));
    SECTION("involution") {
        const FormalContext dd = dual_context(dual_context(k));
        for (std::size_t g = 0; g < 3; ++g)
            for (std::size_t m = 0; m < 3; ++m) REQUIRE(dd.incident(g, m) == k.incident(g, m));
    }
    SECTION("concept count is preserved") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            const Poset p = testutil::random_poset(1 + trial % 6, rng);
            for (const FormalContext& ctx : {ordinal_scale(p), contraordinal_scale(p)})
                REQUIRE(all_concepts(ctx).size() == all_concepts(dual_context(ctx)).size());
        }
    }
    SECTION("dual of the ordinal chain scale is the reversed chain's scale") {
        const FormalContext d = dual_context(ordinal_scale(make_chain(5)));
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) REQUIRE(d.incident(i, j) == (j <= i));
    }
}

TEST_CASE("object and attribute concepts") {
    const FormalContext cc4 = contraordinal_scale(make_chain(4));
    REQUIRE(object_concept(cc4, "c1").extent == Bitset::single(0));

    const FormalContext ca3 = contraordinal_scale(make_antichain(3));
    const FormalConcept g1 = object_concept(ca3, "a1");
    REQUIRE(g1.extent == Bitset::single(0));
    REQUIRE(g1.intent == labels_to_attributes(ca3, {"a2", "a3"}));

    SECTION("mu m sits weakly above gamma g whenever g I m") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 10; ++trial) {
            const Poset p = testutil::random_poset(2 + trial % 5, rng);
            const FormalContext ctx = contraordinal_scale(p);
            const ConceptLattice l = all_concepts(ctx);
            for (std::size_t g = 0; g < ctx.object_count(); ++g)
                for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
                    if (!ctx.incident(g, m)) continue;
                    const auto gi = l.index_of_extent(object_concept(ctx, ctx.objects()[g]).extent);
                    const auto mi =
                        l.index_of_extent(attribute_concept(ctx, ctx.attributes()[m]).extent);
                    REQUIRE(l.leq(gi, mi));
                }
        }
    }
}

TEST_CASE("Dedekind-MacNeille completion") {
    SECTION("a chain is already complete") {
        for (std::size_t n = 1; n <= 8; ++n) {
            const ConceptLattice l = dm_completion(make_chain(n));
            REQUIRE(l.size() == n);
            REQUIRE(poset_isomorphic(l.to_poset(), make_chain(n)).isomorphic);
        }
    }
    SECTION("an antichain pair completes to the diamond") {
        const ConceptLattice l = dm_completion(make_antichain(2));
        REQUIRE(l.size() == 4);
        REQUIRE(poset_isomorphic(l.to_poset(), boolean_lattice(2)).isomorphic);
    }
    SECTION("the original poset embeds order-faithfully through gamma") {
        std::mt19937_64 rng(42);
        for (int trial = 0; trial < 15; ++trial) {
            const Poset p = testutil::random_poset(1 + trial % 7, rng);
            const FormalContext ctx = ordinal_scale(p);
            const ConceptLattice l = dm_completion(p);
            for (std::size_t x = 0; x < p.size(); ++x)
                for (std::size_t y = 0; y < p.size(); ++y) {
                    const auto gx = l.index_of_extent(object_concept(ctx, p.label(x)).extent);
                    const auto gy = l.index_of_extent(object_concept(ctx, p.label(y)).extent);
                    REQUIRE(p.leq(x, y) == l.leq(gx, gy));
                }
        }
        for (std::size_t m = 2; m <= 6; ++m)
            REQUIRE(dm_completion(make_antichain(m)).size() == m + 2); // bottom + atoms + top
    }
}

TEST_CASE("concept cap") {
    REQUIRE_THROWS_AS(all_concepts(contraordinal_scale(make_antichain(10)), 100), CapacityError);
}
