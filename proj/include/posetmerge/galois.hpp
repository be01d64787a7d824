#pragma once

// Dual bonds, the correspondence between dual bonds and Galois connections of
// the concept lattices, and the enumeration of all Galois connections between
// two chains and between a Boolean lattice and a chain.

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "posetmerge/concept_lattice.hpp"
#include "posetmerge/context.hpp"
#include "posetmerge/cross_relation.hpp"
#include "posetmerge/errors.hpp"
#include "posetmerge/plane_partition.hpp"
#include "posetmerge/poset.hpp"

namespace posetmerge {

// A pair of antitone maps phi: P -> Q, psi: Q -> P with p <= psi(phi(p)) and
// q <= phi(psi(q)). Maps are stored as index vectors into the two posets.
struct GaloisConnection {
    Poset p, q;
    std::vector<std::size_t> phi; // p index -> q index
    std::vector<std::size_t> psi; // q index -> p index

    bool same_maps(const GaloisConnection& o) const { return phi == o.phi && psi == o.psi; }
};

// Checks the three defining laws over all elements and pairs. Throws on
// partial or ill-typed maps.
inline bool is_galois_connection(const std::vector<std::size_t>& phi,
                                 const std::vector<std::size_t>& psi, const Poset& p,
                                 const Poset& q) {
    if (phi.size() != p.size() || psi.size() != q.size())
        throw DomainError("Galois connection maps must be total");
    for (auto v : phi)
        if (v >= q.size()) throw DomainError("phi maps outside of Q");
    for (auto v : psi)
        if (v >= p.size()) throw DomainError("psi maps outside of P");
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.leq(a, b) && !q.leq(phi[b], phi[a])) return false;
    for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b)
            if (q.leq(a, b) && !p.leq(psi[b], psi[a])) return false;
    for (std::size_t a = 0; a < p.size(); ++a)
        if (!p.leq(a, psi[phi[a]])) return false;
    for (std::size_t b = 0; b < q.size(); ++b)
        if (!q.leq(b, phi[psi[b]])) return false;
    return true;
}

inline bool is_galois_connection(const GaloisConnection& g) {
    return is_galois_connection(g.phi, g.psi, g.p, g.q);
}

// R between the object sets is a dual bond iff every row is an extent of the
// second context and every column an extent of the first.
inline bool is_dual_bond(const CrossRelation& r, const FormalContext& ctx1,
                         const FormalContext& ctx2) {
    if (r.left != ctx1.objects() || r.right != ctx2.objects())
        throw DomainError("dual bond check: relation sides do not match the contexts' objects");
    for (const auto& row : r.rows)
        if (!is_extent(ctx2, row)) return false;
    for (std::size_t j = 0; j < r.right.size(); ++j)
        if (!is_extent(ctx1, r.column(j))) return false;
    return true;
}

// A validated dual bond together with its two contexts.
struct DualBond {
    CrossRelation relation;
    FormalContext ctx1, ctx2;
};

inline DualBond make_dual_bond(CrossRelation relation, FormalContext ctx1, FormalContext ctx2) {
    if (!is_dual_bond(relation, ctx1, ctx2)) throw DomainError("relation is not a dual bond");
    return {std::move(relation), std::move(ctx1), std::move(ctx2)};
}

// phi(X, X^I) = (X^R, X^RJ) and psi(Y, Y^J) = (Y^R, Y^RI), as maps between
// the two concept lattices (elements labeled by their extents).
inline GaloisConnection galois_from_dual_bond(const CrossRelation& r, const FormalContext& ctx1,
                                              const FormalContext& ctx2) {
    if (!is_dual_bond(r, ctx1, ctx2)) throw DomainError("relation is not a dual bond");
    const ConceptLattice l1 = all_concepts(ctx1);
    const ConceptLattice l2 = all_concepts(ctx2);
    GaloisConnection g;
    g.p = l1.to_poset();
    g.q = l2.to_poset();
    g.phi.reserve(l1.size());
    for (std::size_t i = 0; i < l1.size(); ++i) {
        Bitset image = Bitset::prefix(ctx2.object_count());
        for (std::size_t gobj = 0; gobj < ctx1.object_count(); ++gobj)
            if (l1.at(i).extent.test(gobj)) image &= r.rows[gobj];
        g.phi.push_back(l2.index_of_extent(image));
    }
    g.psi.reserve(l2.size());
    for (std::size_t j = 0; j < l2.size(); ++j) {
        Bitset image = Bitset::prefix(ctx1.object_count());
        for (std::size_t hobj = 0; hobj < ctx2.object_count(); ++hobj)
            if (l2.at(j).extent.test(hobj)) image &= r.column(hobj);
        g.psi.push_back(l1.index_of_extent(image));
    }
    assert(is_galois_connection(g));
    return g;
}

inline GaloisConnection galois_from_dual_bond(const DualBond& b) {
    return galois_from_dual_bond(b.relation, b.ctx1, b.ctx2);
}

// R = {(g, h) : gamma g <= psi(gamma h)}; inverts galois_from_dual_bond.
inline CrossRelation dual_bond_from_galois(const GaloisConnection& g, const FormalContext& ctx1,
                                           const FormalContext& ctx2) {
    const ConceptLattice l1 = all_concepts(ctx1);
    const ConceptLattice l2 = all_concepts(ctx2);
    if (g.p.labels() != l1.to_poset().labels() || g.q.labels() != l2.to_poset().labels())
        throw DomainError("Galois connection is not between the concept lattices of these contexts");
    if (!is_galois_connection(g)) throw DomainError("maps do not form a Galois connection");
    CrossRelation r(ctx1.objects(), ctx2.objects());
    std::vector<std::size_t> gamma1(ctx1.object_count()), gamma2(ctx2.object_count());
    for (std::size_t i = 0; i < ctx1.object_count(); ++i)
        gamma1[i] = l1.index_of_extent(object_concept(ctx1, ctx1.objects()[i]).extent);
    for (std::size_t j = 0; j < ctx2.object_count(); ++j)
        gamma2[j] = l2.index_of_extent(object_concept(ctx2, ctx2.objects()[j]).extent);
    for (std::size_t i = 0; i < ctx1.object_count(); ++i)
        for (std::size_t j = 0; j < ctx2.object_count(); ++j)
            if (l1.leq(gamma1[i], g.psi[gamma2[j]])) r.set(i, j);
    return r;
}

// Horizontal reflection of a cross-table: (b, a_i) related in the output iff
// (b, a_{M+1-i}) is related in the input, M the right-hand ground set size.
inline CrossRelation reflect_s_to_t(const CrossRelation& s) {
    CrossRelation t(s.left, s.right);
    const std::size_t m = s.right.size();
    for (std::size_t j = 0; j < s.rows.size(); ++j)
        for (std::size_t i = 0; i < m; ++i)
            if (s.test(j, m - 1 - i)) t.set(j, i);
    return t;
}

// The dual bonds behind the Galois connections between an m-chain and an
// n-chain: for every 0/1 plane partition in the (m-1) x (n-1) box, the
// reflected S relation. Relations run between the contraordinal scales of the
// two shrunken chains, whose concept lattices are the m- and n-chains.
inline std::vector<CrossRelation> enumerate_chain_dual_bonds(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw DomainError("chains need at least one element");
    std::vector<CrossRelation> out;
    for (const auto& pp : enumerate_plane_partitions(m - 1, n - 1, 1)) {
        Merging mg = pp_to_merging(pp); // R is empty: parts never reach 2
        assert(mg.r.pair_count() == 0);
        out.push_back(reflect_s_to_t(mg.s));
    }
    return out;
}

namespace detail {

// The concept lattice of the contraordinal scale of a chain is a chain; its
// concepts, in canonical order, are the prefixes in ascending size. This is
// the identification used to relabel lattice elements as chain positions.
inline void assert_prefix_chain_lattice(const ConceptLattice& l) {
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l.at(i).extent != Bitset::prefix(i))
            throw DomainError("internal error: expected a prefix-chain concept lattice");
    }
}

} // namespace detail

// All Galois connections between an m-chain (elements a1..am) and an n-chain
// (elements b1..bn). phi maps a's to b's, psi maps b's to a's.
inline std::vector<GaloisConnection> enumerate_galois_chains(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw DomainError("chains need at least one element");
    const FormalContext k1 = contraordinal_scale(make_chain(n - 1, "b"));
    const FormalContext k2 = contraordinal_scale(make_chain(m - 1, "a"));
    const ConceptLattice l1 = all_concepts(k1); // n-chain
    const ConceptLattice l2 = all_concepts(k2); // m-chain
    detail::assert_prefix_chain_lattice(l1);
    detail::assert_prefix_chain_lattice(l2);
    const Poset pa = make_chain(m, "a");
    const Poset pb = make_chain(n, "b");
    std::vector<GaloisConnection> out;
    for (const auto& t : enumerate_chain_dual_bonds(m, n)) {
        const GaloisConnection raw = galois_from_dual_bond(t, k1, k2);
        // concept index == chain position on both sides, so the maps carry over
        GaloisConnection g{pa, pb, raw.psi, raw.phi};
        assert(is_galois_connection(g));
        out.push_back(std::move(g));
    }
    return out;
}

// The dual bonds behind the Galois connections between the Boolean lattice
// with 2^m elements and a chain with n+1 elements: one relation per coloring
// of the V2 side with colors in 1..n+1 (V1 pinned to color 1). Each relation
// runs from the contraordinal scale of the n-chain to the contraordinal scale
// of the m-antichain.
inline std::vector<CrossRelation> enumerate_boolean_chain_dual_bonds(std::size_t m, std::size_t n) {
    const Poset chain = make_chain(n, "c");
    const Poset anti = make_antichain(m, "a");
    std::vector<CrossRelation> out;
    std::vector<int> colors(m, 1);
    while (true) {
        CrossRelation s(chain.labels(), anti.labels());
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t k2 = static_cast<std::size_t>(colors[i]);
            for (std::size_t j = 1; j + k2 <= n + 1; ++j) s.set(j - 1, i);
        }
        out.push_back(std::move(s));
        // next color vector in lexicographic order
        std::size_t pos = m;
        while (pos > 0 && colors[pos - 1] == static_cast<int>(n + 1)) {
            colors[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) break;
        ++colors[pos - 1];
    }
    return out;
}

// All Galois connections between the Boolean lattice B_m (elements labeled by
// subsets of {a1..am}) and the chain with n+1 elements b1..b_{n+1}. phi maps
// subsets to chain elements, psi the other way.
inline std::vector<GaloisConnection> enumerate_galois_boolean_chain(std::size_t m, std::size_t n) {
    if (m > 10) throw CapacityError("the Boolean lattice side is capped at 10 atoms");
    const FormalContext k1 = contraordinal_scale(make_chain(n, "c"));
    const FormalContext k2 = contraordinal_scale(make_antichain(m, "a"));
    const ConceptLattice l1 = all_concepts(k1);
    detail::assert_prefix_chain_lattice(l1);
    const Poset boolean = boolean_lattice(m, "a");
    const Poset lattice_poset = all_concepts(k2).to_poset();
    if (boolean.labels() != lattice_poset.labels() || !boolean.same_relation(lattice_poset))
        throw DomainError("internal error: Boolean lattice does not match its concept lattice");
    const Poset chain = make_chain(n + 1, "b");
    std::vector<GaloisConnection> out;
    for (const auto& s : enumerate_boolean_chain_dual_bonds(m, n)) {
        const GaloisConnection raw = galois_from_dual_bond(s, k1, k2);
        GaloisConnection g{boolean, chain, raw.psi, raw.phi};
        assert(is_galois_connection(g));
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace posetmerge
