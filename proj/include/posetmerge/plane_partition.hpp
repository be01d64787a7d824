#pragma once

// Plane partitions in an m x n box with bounded parts, and the bijection
// between the part-at-most-2 ones and proper mergings of two chains.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "posetmerge/counting.hpp"
#include "posetmerge/errors.hpp"
#include "posetmerge/merging.hpp"
#include "posetmerge/poset.hpp"

namespace posetmerge {

struct PlanePartition {
    std::size_t rows = 0, cols = 0;
    int max_part = 0;
    std::vector<std::vector<int>> parts; // rows x cols, weakly decreasing both ways

    bool operator==(const PlanePartition&) const = default;

    // Cellwise order; shapes must agree.
    bool leq(const PlanePartition& o) const {
        if (rows != o.rows || cols != o.cols) throw DomainError("plane partition shapes differ");
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (parts[i][j] > o.parts[i][j]) return false;
        return true;
    }
};

// Throws a descriptive DomainError when the array is not a plane partition
// within the stated box. Cell coordinates in messages are 1-based.
inline void validate_plane_partition(const PlanePartition& pp) {
    if (pp.max_part < 0) throw DomainError("max part bound must be nonnegative");
    if (pp.parts.size() != pp.rows)
        throw DomainError("parts array has " + std::to_string(pp.parts.size()) + " rows, expected " +
                          std::to_string(pp.rows));
    for (std::size_t i = 0; i < pp.rows; ++i) {
        if (pp.parts[i].size() != pp.cols)
            throw DomainError("row " + std::to_string(i + 1) + " has " +
                              std::to_string(pp.parts[i].size()) + " columns, expected " +
                              std::to_string(pp.cols));
        for (std::size_t j = 0; j < pp.cols; ++j) {
            const int v = pp.parts[i][j];
            if (v < 0 || v > pp.max_part)
                throw DomainError("part out of range at (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + "): " + std::to_string(v));
            if (j > 0 && pp.parts[i][j - 1] < v)
                throw DomainError("parts not weakly decreasing at (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")");
            if (i > 0 && pp.parts[i - 1][j] < v)
                throw DomainError("parts not weakly decreasing at (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")");
        }
    }
}

// All plane partitions in the m x n box with parts at most l, in ascending
// lexicographic order of the row-major part sequence.
inline std::vector<PlanePartition> enumerate_plane_partitions(std::size_t m, std::size_t n, int l,
                                                              const Limits& limits = {}) {
    if (l < 0) throw DomainError("max part bound must be nonnegative");
    if (macmahon(m, n, l) > BigCount(limits.max_items))
        throw CapacityError("plane partition enumeration would exceed the cap");
    std::vector<PlanePartition> out;
    PlanePartition cur{m, n, l, std::vector<std::vector<int>>(m, std::vector<int>(n, 0))};
    auto dfs = [&](auto&& self, std::size_t cell) -> void {
        if (cell == m * n) {
            out.push_back(cur);
            return;
        }
        const std::size_t i = cell / n, j = cell % n;
        int bound = l;
        if (i > 0) bound = std::min(bound, cur.parts[i - 1][j]);
        if (j > 0) bound = std::min(bound, cur.parts[i][j - 1]);
        for (int v = 0; v <= bound; ++v) {
            cur.parts[i][j] = v;
            self(self, cell + 1);
        }
        cur.parts[i][j] = 0;
    };
    if (m == 0 || n == 0)
        out.push_back(cur);
    else
        dfs(dfs, 0);
    return out;
}

// Column j of the partition (0-based) pairs with the chain element of index
// n-1-j on the right-hand chain: the one reindexing step of the bijection.
inline std::size_t pp_col_to_chain_index(std::size_t n, std::size_t j) { return n - 1 - j; }

// Parts 2 put the row chain below the column chain, parts 0 the other way
// around, parts 1 leave the elements incomparable. Always yields a proper
// merging of the two chains.
inline Merging pp_to_merging(const PlanePartition& pp) {
    validate_plane_partition(pp);
    for (std::size_t i = 0; i < pp.rows; ++i)
        for (std::size_t j = 0; j < pp.cols; ++j)
            if (pp.parts[i][j] > 2)
                throw DomainError("the merging bijection needs parts at most 2, found " +
                                  std::to_string(pp.parts[i][j]) + " at (" + std::to_string(i + 1) +
                                  "," + std::to_string(j + 1) + ")");
    const Poset p = make_chain(pp.rows, "a");
    const Poset q = make_chain(pp.cols, "b");
    CrossRelation r(p.labels(), q.labels());
    CrossRelation s(q.labels(), p.labels());
    for (std::size_t i = 0; i < pp.rows; ++i)
        for (std::size_t j = 0; j < pp.cols; ++j) {
            const std::size_t bj = pp_col_to_chain_index(pp.cols, j);
            if (pp.parts[i][j] == 2) r.set(i, bj);
            if (pp.parts[i][j] == 0) s.set(bj, i);
        }
    Merging m = classify_merging(p, q, r, s);
    if (!m.is_proper_merging())
        throw DomainError("internal error: plane partition did not induce a proper merging");
    return m;
}

// Exact inverse of pp_to_merging.
inline PlanePartition merging_to_pp(const Merging& m) {
    if (!m.is_proper_merging()) throw DomainError("the partition bijection needs a proper merging");
    detail::require_ascending_chain(m.p, "P");
    detail::require_ascending_chain(m.q, "Q");
    const std::size_t rows = m.p.size(), cols = m.q.size();
    PlanePartition pp{rows, cols, 2, std::vector<std::vector<int>>(rows, std::vector<int>(cols, 1))};
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const std::size_t bj = pp_col_to_chain_index(cols, j);
            if (m.r.test(i, bj)) pp.parts[i][j] = 2;
            else if (m.s.test(bj, i)) pp.parts[i][j] = 0;
        }
    validate_plane_partition(pp);
    return pp;
}

} // namespace posetmerge
