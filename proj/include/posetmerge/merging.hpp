#pragma once

// Mergings of two quasi-ordered sets: classification against the bond and
// composition conditions, the merged order, exhaustive enumeration, and the
// merging lattice.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "posetmerge/bitset.hpp"
#include "posetmerge/concept_lattice.hpp"
#include "posetmerge/context.hpp"
#include "posetmerge/cross_relation.hpp"
#include "posetmerge/errors.hpp"
#include "posetmerge/poset.hpp"

namespace posetmerge {

struct Limits {
    std::size_t max_concepts = kDefaultMaxConcepts;
    std::size_t max_bonds = 2'000'000;
    unsigned long long max_bond_pairs = 50'000'000;
    std::size_t max_items = 2'000'000; // generic cap for other exhaustive enumerations
};

struct Merging {
    QuasiOrder p, q;
    CrossRelation r; // P x Q, "this part of P sits weakly below Q"
    CrossRelation s; // Q x P
    bool r_is_bond = false;
    bool s_is_bond = false;
    bool rs_in_p = false; // R o S contained in the order of P
    bool sr_in_q = false;
    bool proper = false; // R and S^{-1} disjoint

    bool is_merging() const { return r_is_bond && s_is_bond && rs_in_p && sr_in_q; }
    bool is_proper_merging() const { return is_merging() && proper; }

    bool same_relations(const Merging& o) const {
        return r.same_pairs(o.r) && s.same_pairs(o.s);
    }
};

namespace detail {

inline void check_merging_shape(const QuasiOrder& p, const QuasiOrder& q, const CrossRelation& r,
                                const CrossRelation& s) {
    for (const auto& lp : p.labels())
        for (const auto& lq : q.labels())
            if (lp == lq) throw DomainError("ground sets are not disjoint: both contain '" + lp + "'");
    if (r.left != p.labels() || r.right != q.labels())
        throw DomainError("relation R must relate the elements of P to the elements of Q");
    if (s.left != q.labels() || s.right != p.labels())
        throw DomainError("relation S must relate the elements of Q to the elements of P");
    if (p.size() + q.size() > Bitset::capacity())
        throw CapacityError("merged ground set exceeds the bitset capacity");
}

} // namespace detail

inline Merging classify_merging(const QuasiOrder& p, const QuasiOrder& q, const CrossRelation& r,
                                const CrossRelation& s) {
    detail::check_merging_shape(p, q, r, s);
    Merging m{p, q, r, s};
    const FormalContext cp = contraordinal_scale(p);
    const FormalContext cq = contraordinal_scale(q);
    m.r_is_bond = is_bond(r, cp, cq);
    m.s_is_bond = is_bond(s, cq, cp);

    const CrossRelation rs = relational_product(r, s);
    m.rs_in_p = true;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!rs.rows[i].subset_of(p.upset(i))) m.rs_in_p = false;
    const CrossRelation sr = relational_product(s, r);
    m.sr_in_q = true;
    for (std::size_t j = 0; j < q.size(); ++j)
        if (!sr.rows[j].subset_of(q.upset(j))) m.sr_in_q = false;

    m.proper = true;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            if (r.test(i, j) && s.test(j, i)) m.proper = false;
    return m;
}

// The union order on P u Q. Requires a validated merging; the QuasiOrder
// constructor re-checks that the union really is reflexive and transitive.
inline QuasiOrder merged_order(const Merging& m) {
    if (!m.is_merging())
        throw DomainError("merged_order requires a pair (R,S) that classifies as a merging");
    const std::size_t np = m.p.size(), nq = m.q.size();
    std::vector<std::string> labels = m.p.labels();
    labels.insert(labels.end(), m.q.labels().begin(), m.q.labels().end());
    std::vector<Bitset> rows(np + nq);
    for (std::size_t i = 0; i < np; ++i) {
        rows[i] = m.p.upset(i);
        for (std::size_t j = 0; j < nq; ++j)
            if (m.r.test(i, j)) rows[i].set(np + j);
    }
    for (std::size_t j = 0; j < nq; ++j) {
        for (std::size_t i = 0; i < np; ++i)
            if (m.s.test(j, i)) rows[np + j].set(i);
        for (std::size_t k = 0; k < nq; ++k)
            if (m.q.leq(j, k)) rows[np + j].set(np + k);
    }
    return QuasiOrder(std::move(labels), std::move(rows));
}

inline std::optional<Poset> merged_poset(const Merging& m) {
    const QuasiOrder u = merged_order(m);
    if (!u.antisymmetric()) return std::nullopt;
    return Poset(u.labels(), u.rows());
}

// All bonds from src to dst, enumerated row-wise over the intents of dst and
// pruned by the column-extent condition; sorted by bit pattern.
inline std::vector<CrossRelation> enumerate_bonds(const FormalContext& src, const FormalContext& dst,
                                                  const Limits& limits = {}) {
    const ConceptLattice dst_lattice = all_concepts(dst, limits.max_concepts);
    std::vector<Bitset> row_choices;
    for (const auto& c : dst_lattice.concepts()) row_choices.push_back(c.intent);
    std::sort(row_choices.begin(), row_choices.end(),
              [](const Bitset& a, const Bitset& b) { return word_less(a, b); });
    row_choices.erase(std::unique(row_choices.begin(), row_choices.end()), row_choices.end());

    const ConceptLattice src_lattice = all_concepts(src, limits.max_concepts);
    std::vector<Bitset> extents;
    for (const auto& c : src_lattice.concepts()) extents.push_back(c.extent);
    std::set<Bitset, Bitset::WordLess> extent_set(extents.begin(), extents.end());

    const std::size_t n_rows = src.object_count();
    const std::size_t n_cols = dst.attribute_count();
    std::vector<CrossRelation> out;
    CrossRelation current(src.objects(), dst.attributes());
    std::vector<Bitset> cols(n_cols); // partial columns over the rows chosen so far

    auto column_feasible = [&](std::size_t rows_done) {
        const Bitset mask = Bitset::prefix(rows_done);
        for (std::size_t j = 0; j < n_cols; ++j) {
            bool ok = false;
            for (const auto& e : extents)
                if ((e & mask) == cols[j]) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (i == n_rows) {
            for (std::size_t j = 0; j < n_cols; ++j)
                if (!extent_set.count(cols[j])) return;
            out.push_back(current);
            if (out.size() > limits.max_bonds)
                throw CapacityError("bond enumeration exceeded the cap of " +
                                    std::to_string(limits.max_bonds));
            return;
        }
        for (const auto& choice : row_choices) {
            current.rows[i] = choice;
            for (std::size_t j = 0; j < n_cols; ++j)
                if (choice.test(j)) cols[j].set(i);
            if (column_feasible(i + 1)) self(self, i + 1);
            for (std::size_t j = 0; j < n_cols; ++j)
                if (choice.test(j)) cols[j].reset(i);
        }
        current.rows[i] = Bitset{};
    };
    dfs(dfs, 0);

    std::sort(out.begin(), out.end(),
              [](const CrossRelation& a, const CrossRelation& b) { return bits_less(a, b); });
    return out;
}

// Exactly all (proper) mergings of p and q, sorted by (R bits, S bits).
inline std::vector<Merging> enumerate_mergings(const QuasiOrder& p, const QuasiOrder& q,
                                               bool proper_only, const Limits& limits = {}) {
    detail::check_merging_shape(p, q, CrossRelation::empty(p.labels(), q.labels()),
                                CrossRelation::empty(q.labels(), p.labels()));
    const FormalContext cp = contraordinal_scale(p);
    const FormalContext cq = contraordinal_scale(q);
    const auto r_bonds = enumerate_bonds(cp, cq, limits);
    const auto s_bonds = enumerate_bonds(cq, cp, limits);
    const unsigned long long pair_count =
        static_cast<unsigned long long>(r_bonds.size()) * s_bonds.size();
    if (pair_count > limits.max_bond_pairs)
        throw CapacityError("merging enumeration would test " + std::to_string(pair_count) +
                            " bond pairs, above the cap of " + std::to_string(limits.max_bond_pairs));

    std::vector<CrossRelation> s_inverses;
    s_inverses.reserve(s_bonds.size());
    for (const auto& s : s_bonds) s_inverses.push_back(s.inverse());

    std::vector<Merging> out;
    for (const auto& r : r_bonds)
        for (std::size_t k = 0; k < s_bonds.size(); ++k) {
            const auto& s = s_bonds[k];
            Merging m{p, q, r, s, true, true, true, true, true};
            const CrossRelation rs = relational_product(r, s);
            for (std::size_t i = 0; i < p.size() && m.rs_in_p; ++i)
                if (!rs.rows[i].subset_of(p.upset(i))) m.rs_in_p = false;
            if (!m.rs_in_p) continue;
            const CrossRelation sr = relational_product(s, r);
            for (std::size_t j = 0; j < q.size() && m.sr_in_q; ++j)
                if (!sr.rows[j].subset_of(q.upset(j))) m.sr_in_q = false;
            if (!m.sr_in_q) continue;
            for (std::size_t i = 0; i < p.size() && m.proper; ++i)
                if (r.rows[i].intersects(s_inverses[k].rows[i])) m.proper = false;
            if (proper_only && !m.proper) continue;
            out.push_back(std::move(m));
        }
    // r_bonds/s_bonds are already bit-sorted, so the nested loop emits the
    // (R bits, S bits) lexicographic order.
    return out;
}

struct MergingLattice {
    std::vector<Merging> mergings;

    std::size_t size() const { return mergings.size(); }

    // (R1,S1) below (R2,S2) iff R1 within R2 and S1 contains S2.
    bool leq(std::size_t i, std::size_t j) const {
        return mergings[i].r.subrelation_of(mergings[j].r) &&
               mergings[j].s.subrelation_of(mergings[i].s);
    }

    Poset to_poset() const {
        if (size() > Bitset::capacity())
            throw CapacityError("merging lattice with " + std::to_string(size()) +
                                " elements cannot be converted to a poset");
        std::vector<std::string> labels;
        std::vector<Bitset> rows(size());
        for (std::size_t i = 0; i < size(); ++i) {
            labels.push_back("m" + std::to_string(i));
            for (std::size_t j = 0; j < size(); ++j)
                if (leq(i, j)) rows[i].set(j);
        }
        return Poset(std::move(labels), std::move(rows));
    }

    std::optional<std::size_t> bottom() const { return extremum(false); }
    std::optional<std::size_t> top() const { return extremum(true); }

private:
    std::optional<std::size_t> extremum(bool top) const {
        for (std::size_t i = 0; i < size(); ++i) {
            bool all = true;
            for (std::size_t j = 0; j < size() && all; ++j)
                all = top ? leq(j, i) : leq(i, j);
            if (all) return i;
        }
        return std::nullopt;
    }
};

inline MergingLattice merging_lattice(const QuasiOrder& p, const QuasiOrder& q, bool proper_only,
                                      const Limits& limits = {}) {
    return MergingLattice{enumerate_mergings(p, q, proper_only, limits)};
}

} // namespace posetmerge
