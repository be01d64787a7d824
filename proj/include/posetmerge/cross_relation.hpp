#pragma once

// Binary relations between two labeled ground sets, and the bond test.

#include <string>
#include <utility>
#include <vector>

#include "posetmerge/bitset.hpp"
#include "posetmerge/context.hpp"
#include "posetmerge/errors.hpp"

namespace posetmerge {

struct CrossRelation {
    std::vector<std::string> left, right;
    std::vector<Bitset> rows; // rows[i] is the set of right-indices related to left i

    CrossRelation() = default;
    CrossRelation(std::vector<std::string> l, std::vector<std::string> r)
        : left(std::move(l)), right(std::move(r)), rows(left.size()) {}

    static CrossRelation empty(std::vector<std::string> l, std::vector<std::string> r) {
        return CrossRelation(std::move(l), std::move(r));
    }

    static CrossRelation full(std::vector<std::string> l, std::vector<std::string> r) {
        CrossRelation c(std::move(l), std::move(r));
        for (auto& row : c.rows) row = Bitset::prefix(c.right.size());
        return c;
    }

    bool test(std::size_t i, std::size_t j) const { return rows[i].test(j); }
    void set(std::size_t i, std::size_t j) { rows[i].set(j); }

    Bitset column(std::size_t j) const {
        Bitset c;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].test(j)) c.set(i);
        return c;
    }

    CrossRelation inverse() const {
        CrossRelation inv(right, left);
        for (std::size_t j = 0; j < right.size(); ++j) inv.rows[j] = column(j);
        return inv;
    }

    bool subrelation_of(const CrossRelation& o) const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!rows[i].subset_of(o.rows[i])) return false;
        return true;
    }

    bool same_pairs(const CrossRelation& o) const { return rows == o.rows; }

    std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < right.size(); ++j)
                if (rows[i].test(j)) out.emplace_back(i, j);
        return out;
    }

    std::size_t pair_count() const {
        std::size_t c = 0;
        for (const auto& r : rows) c += r.count();
        return c;
    }

    // Row-major cell order, false < true. Gives the canonical enumeration order.
    friend bool bits_less(const CrossRelation& a, const CrossRelation& b) {
        for (std::size_t i = 0; i < a.rows.size(); ++i) {
            const Bitset d = a.rows[i] ^ b.rows[i];
            const int j = d.lowest_bit();
            if (j >= 0) return !a.rows[i].test(static_cast<std::size_t>(j));
        }
        return false;
    }
};

// R o S: (a, c) related iff some b has (a, b) in r1 and (b, c) in r2.
inline CrossRelation relational_product(const CrossRelation& r1, const CrossRelation& r2) {
    if (r1.right != r2.left)
        throw DomainError("relational product requires matching middle ground sets");
    CrossRelation out(r1.left, r2.right);
    for (std::size_t i = 0; i < r1.rows.size(); ++i)
        for (std::size_t b = 0; b < r1.right.size(); ++b)
            if (r1.rows[i].test(b)) out.rows[i] |= r2.rows[b];
    return out;
}

// R is a bond from ctx1 to ctx2 iff every row is an intent of ctx2 and every
// column an extent of ctx1.
inline bool is_bond(const CrossRelation& r, const FormalContext& ctx1, const FormalContext& ctx2) {
    if (r.left != ctx1.objects() || r.right != ctx2.attributes())
        throw DomainError("bond check: relation sides do not match the contexts");
    for (const auto& row : r.rows)
        if (!is_intent(ctx2, row)) return false;
    for (std::size_t j = 0; j < r.right.size(); ++j)
        if (!is_extent(ctx1, r.column(j))) return false;
    return true;
}

} // namespace posetmerge
