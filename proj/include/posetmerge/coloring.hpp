#pragma once

// Monotone colorings of complete bipartite digraphs, the bijection with
// proper mergings of an antichain and a chain, and the component-flip move on
// proper mergings of two antichains.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "posetmerge/errors.hpp"
#include "posetmerge/merging.hpp"
#include "posetmerge/poset.hpp"

namespace posetmerge {

// Colors live in 1..k; every edge of the complete bipartite digraph goes from
// V1 to V2, so monotonicity is exactly max(v1) <= min(v2).
struct MonotoneColoring {
    std::size_t m = 0; // size of each side
    std::size_t k = 0; // number of colors
    std::vector<int> v1, v2;

    bool operator==(const MonotoneColoring&) const = default;

    bool leq(const MonotoneColoring& o) const {
        if (m != o.m) throw DomainError("coloring sizes differ");
        for (std::size_t i = 0; i < m; ++i)
            if (v1[i] > o.v1[i] || v2[i] > o.v2[i]) return false;
        return true;
    }
};

inline void validate_coloring(const MonotoneColoring& g) {
    if (g.v1.size() != g.m || g.v2.size() != g.m)
        throw DomainError("coloring has " + std::to_string(g.v1.size()) + "+" +
                          std::to_string(g.v2.size()) + " colors for side size " + std::to_string(g.m));
    int max1 = 0;
    int min2 = static_cast<int>(g.k) + 1;
    for (std::size_t i = 0; i < g.m; ++i) {
        if (g.v1[i] < 1 || g.v1[i] > static_cast<int>(g.k) || g.v2[i] < 1 ||
            g.v2[i] > static_cast<int>(g.k))
            throw DomainError("color out of range at position " + std::to_string(i + 1));
        max1 = std::max(max1, g.v1[i]);
        min2 = std::min(min2, g.v2[i]);
    }
    if (g.m > 0 && max1 > min2) throw DomainError("coloring is not monotone: a V1 color exceeds a V2 color");
}

// All monotone k-colorings of the complete bipartite digraph with sides of
// size m, in lexicographic (v1, v2) order.
inline std::vector<MonotoneColoring> enumerate_monotone_colorings(std::size_t m, std::size_t k) {
    std::vector<MonotoneColoring> out;
    MonotoneColoring cur{m, k, std::vector<int>(m, 1), std::vector<int>(m, 1)};
    if (m == 0) {
        out.push_back(MonotoneColoring{0, k, {}, {}});
        return out;
    }
    auto fill2 = [&](auto&& self, std::size_t i, int min_allowed) -> void {
        if (i == m) {
            out.push_back(cur);
            return;
        }
        for (int c = min_allowed; c <= static_cast<int>(k); ++c) {
            cur.v2[i] = c;
            self(self, i + 1, min_allowed);
        }
    };
    auto fill1 = [&](auto&& self, std::size_t i, int max_so_far) -> void {
        if (i == m) {
            fill2(fill2, 0, max_so_far);
            return;
        }
        for (int c = 1; c <= static_cast<int>(k); ++c) {
            cur.v1[i] = c;
            self(self, i + 1, std::max(max_so_far, c));
        }
    };
    fill1(fill1, 0, 1);
    return out;
}

// A vertex of V1 with color c sits below the top c-1 chain elements; a vertex
// of V2 with color c sits above the bottom n+1-c chain elements. Needs k = n+1
// colors for an n-chain; always yields a proper merging.
inline Merging coloring_to_merging(const MonotoneColoring& g) {
    validate_coloring(g);
    if (g.k == 0) throw DomainError("coloring_to_merging needs at least one color");
    const std::size_t n = g.k - 1;
    const Poset a = make_antichain(g.m, "a");
    const Poset c = make_chain(n, "c");
    CrossRelation r(a.labels(), c.labels());
    CrossRelation s(c.labels(), a.labels());
    for (std::size_t i = 0; i < g.m; ++i) {
        const std::size_t k1 = static_cast<std::size_t>(g.v1[i]);
        for (std::size_t j = n + 2 - k1; j <= n; ++j) r.set(i, j - 1);
        const std::size_t k2 = static_cast<std::size_t>(g.v2[i]);
        for (std::size_t j = 1; j + k2 <= n + 1; ++j) s.set(j - 1, i);
    }
    Merging m = classify_merging(a, c, r, s);
    if (!m.is_proper_merging())
        throw DomainError("internal error: monotone coloring did not induce a proper merging");
    return m;
}

// Exact inverse of coloring_to_merging.
inline MonotoneColoring merging_to_coloring(const Merging& m) {
    if (!m.is_proper_merging()) throw DomainError("the coloring bijection needs a proper merging");
    detail::require_antichain(m.p, "P");
    detail::require_ascending_chain(m.q, "Q");
    const std::size_t mm = m.p.size();
    const std::size_t n = m.q.size();
    MonotoneColoring g{mm, n + 1, std::vector<int>(mm, 0), std::vector<int>(mm, 0)};
    for (std::size_t i = 0; i < mm; ++i) {
        // row of a_i in R must be a suffix {c_{n+2-k} .. c_n}
        const std::size_t rc = m.r.rows[i].count();
        for (std::size_t j = 0; j < n; ++j)
            if (m.r.test(i, j) != (j >= n - rc))
                throw DomainError("R row of '" + m.p.label(i) + "' is not a chain suffix");
        g.v1[i] = static_cast<int>(rc + 1);
        // column of a_i in S must be a prefix {c_1 .. c_{n+1-k}}
        std::size_t sc = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (m.s.test(j, i)) ++sc;
        for (std::size_t j = 0; j < n; ++j)
            if (m.s.test(j, i) != (j < sc))
                throw DomainError("S column of '" + m.p.label(i) + "' is not a chain prefix");
        g.v2[i] = static_cast<int>(n + 1 - sc);
    }
    validate_coloring(g);
    return g;
}

struct BipartiteComponents {
    std::vector<std::size_t> component;            // per merged element, P side first
    std::vector<std::vector<std::size_t>> left;    // per component: P indices
    std::vector<std::vector<std::size_t>> right;   // per component: Q indices
    std::size_t count() const { return left.size(); }
    std::size_t component_size(std::size_t c) const { return left[c].size() + right[c].size(); }
};

namespace detail {

inline void require_antichain_pair(const Merging& m) {
    if (!m.is_proper_merging()) throw DomainError("this operation needs a proper merging");
    require_antichain(m.p, "P");
    require_antichain(m.q, "Q");
}

} // namespace detail

// Connected components of the (undirected) Hasse diagram of a proper merging
// of two antichains. The Hasse edges are exactly the R and S pairs.
inline BipartiteComponents hasse_components(const Merging& m) {
    detail::require_antichain_pair(m);
    const std::size_t np = m.p.size(), nq = m.q.size();
    std::vector<int> comp(np + nq, -1);
    std::size_t next = 0;
    for (std::size_t start = 0; start < np + nq; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<std::size_t> stack{start};
        comp[start] = static_cast<int>(next);
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            auto visit = [&](std::size_t w) {
                if (comp[w] < 0) {
                    comp[w] = static_cast<int>(next);
                    stack.push_back(w);
                }
            };
            if (v < np) {
                for (std::size_t j = 0; j < nq; ++j)
                    if (m.r.test(v, j) || m.s.test(j, v)) visit(np + j);
            } else {
                const std::size_t j = v - np;
                for (std::size_t i = 0; i < np; ++i)
                    if (m.r.test(i, j) || m.s.test(j, i)) visit(i);
            }
        }
        ++next;
    }
    BipartiteComponents out;
    out.component.assign(comp.begin(), comp.end());
    out.left.resize(next);
    out.right.resize(next);
    for (std::size_t i = 0; i < np; ++i) out.left[static_cast<std::size_t>(comp[i])].push_back(i);
    for (std::size_t j = 0; j < nq; ++j)
        out.right[static_cast<std::size_t>(comp[np + j])].push_back(j);
    return out;
}

// Reverse every cross pair inside one Hasse component: R pairs become S pairs
// and vice versa. The result is again a proper merging, and differs from the
// input exactly when the component has more than one vertex.
inline Merging flip_component(const Merging& m, std::size_t comp_id) {
    const BipartiteComponents comps = hasse_components(m);
    if (comp_id >= comps.count())
        throw DomainError("invalid component id " + std::to_string(comp_id) + ", merging has " +
                          std::to_string(comps.count()) + " components");
    CrossRelation r = m.r, s = m.s;
    for (std::size_t i : comps.left[comp_id])
        for (std::size_t j : comps.right[comp_id]) {
            if (m.r.test(i, j)) {
                r.rows[i].reset(j);
                s.rows[j].set(i);
            } else if (m.s.test(j, i)) {
                s.rows[j].reset(i);
                r.rows[i].set(j);
            }
        }
    Merging out = classify_merging(m.p, m.q, r, s);
    if (!out.is_proper_merging())
        throw DomainError("internal error: component flip broke the merging conditions");
    return out;
}

} // namespace posetmerge
