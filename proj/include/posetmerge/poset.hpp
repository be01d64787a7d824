#pragma once

// Finite quasi-orders and posets on labeled ground sets, with the predicates
// and small-instance algorithms (covers, lattice laws, isomorphism) the rest
// of the library leans on.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "posetmerge/bitset.hpp"
#include "posetmerge/errors.hpp"

namespace posetmerge {

inline constexpr std::size_t kMaxIsomorphismElements = 40;

// rows[i] is the up-set row: bit j set means element i is weakly below j.
inline std::vector<Bitset> reflexive_transitive_closure(std::vector<Bitset> rows) {
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) rows[i].set(i);
    // iterated boolean squaring: rows[i] |= union of rows[j] over j in rows[i]
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            Bitset acc = rows[i];
            for (std::size_t j = 0; j < n; ++j)
                if (rows[i].test(j)) acc |= rows[j];
            if (!(acc == rows[i])) {
                rows[i] = acc;
                changed = true;
            }
        }
    }
    return rows;
}

namespace detail {

inline void check_labels(const std::vector<std::string>& labels) {
    if (labels.size() > Bitset::capacity())
        throw CapacityError("ground set of " + std::to_string(labels.size()) +
                            " elements exceeds the bitset capacity of " +
                            std::to_string(Bitset::capacity()));
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw DomainError("duplicate element label '" + l + "'");
}

// Returns an offending pair/triple, or nullopt when the law holds.
inline std::optional<std::size_t> find_irreflexive(const std::vector<Bitset>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].test(i)) return i;
    return std::nullopt;
}

inline std::optional<std::array<std::size_t, 3>> find_intransitive(const std::vector<Bitset>& rows) {
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!rows[i].test(j)) continue;
            if (!rows[j].subset_of(rows[i])) {
                for (std::size_t k = 0; k < n; ++k)
                    if (rows[j].test(k) && !rows[i].test(k)) return std::array{i, j, k};
            }
        }
    return std::nullopt;
}

inline std::optional<std::array<std::size_t, 2>> find_symmetric_pair(const std::vector<Bitset>& rows) {
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rows[i].test(j) && rows[j].test(i)) return std::array{i, j};
    return std::nullopt;
}

} // namespace detail

class QuasiOrder {
public:
    QuasiOrder() = default;

    // Validates reflexivity and transitivity; throws DomainError otherwise.
    QuasiOrder(std::vector<std::string> labels, std::vector<Bitset> rows)
        : labels_(std::move(labels)), rows_(std::move(rows)) {
        detail::check_labels(labels_);
        if (rows_.size() != labels_.size())
            throw DomainError("relation has " + std::to_string(rows_.size()) + " rows for " +
                              std::to_string(labels_.size()) + " elements");
        if (auto i = detail::find_irreflexive(rows_))
            throw DomainError("relation is not reflexive at '" + labels_[*i] + "'");
        if (auto t = detail::find_intransitive(rows_))
            throw DomainError("relation is not transitive: '" + labels_[(*t)[0]] + "' <= '" +
                              labels_[(*t)[1]] + "' <= '" + labels_[(*t)[2]] + "' but not '" +
                              labels_[(*t)[0]] + "' <= '" + labels_[(*t)[2]] + "'");
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    bool leq(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    const Bitset& upset(std::size_t i) const { return rows_[i]; }
    const std::vector<Bitset>& rows() const { return rows_; }

    Bitset downset(std::size_t j) const {
        Bitset d;
        for (std::size_t i = 0; i < size(); ++i)
            if (rows_[i].test(j)) d.set(i);
        return d;
    }

    bool antisymmetric() const { return !detail::find_symmetric_pair(rows_).has_value(); }

    std::size_t index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return i;
        throw DomainError("unknown element label '" + label + "'");
    }

    bool same_relation(const QuasiOrder& o) const {
        return labels_ == o.labels_ && rows_ == o.rows_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<Bitset> rows_;
};

class Poset : public QuasiOrder {
public:
    Poset() = default;

    Poset(std::vector<std::string> labels, std::vector<Bitset> rows)
        : QuasiOrder(std::move(labels), std::move(rows)) {
        if (auto p = detail::find_symmetric_pair(this->rows()))
            throw DomainError("relation is not antisymmetric: '" + label((*p)[0]) + "' and '" +
                              label((*p)[1]) + "' are mutually comparable");
    }
};

inline Poset make_chain(std::size_t n, const std::string& prefix = "c") {
    std::vector<std::string> labels;
    std::vector<Bitset> rows;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(prefix + std::to_string(i + 1));
        Bitset r = Bitset::prefix(n) - Bitset::prefix(i);
        rows.push_back(r);
    }
    return Poset(std::move(labels), std::move(rows));
}

inline Poset make_antichain(std::size_t m, const std::string& prefix = "a") {
    std::vector<std::string> labels;
    std::vector<Bitset> rows;
    labels.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        labels.push_back(prefix + std::to_string(i + 1));
        rows.push_back(Bitset::single(i));
    }
    return Poset(std::move(labels), std::move(rows));
}

namespace detail {

// Elements must be listed in ascending chain order.
inline void require_ascending_chain(const QuasiOrder& c, const std::string& role) {
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c.leq(i, j) != (i <= j))
                throw DomainError(role + " must be a chain with elements listed in ascending order");
}

inline void require_antichain(const QuasiOrder& a, const std::string& role) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a.leq(i, j) != (i == j)) throw DomainError(role + " must be an antichain");
}

inline std::string subset_label(const Bitset& s, std::size_t m, const std::string& prefix) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < m; ++i) {
        if (!s.test(i)) continue;
        if (!first) out += ",";
        out += prefix + std::to_string(i + 1);
        first = false;
    }
    out += "}";
    return out;
}

} // namespace detail

// The lattice of all subsets of an m-element set, ordered by inclusion.
// Elements are listed in the lexicographic order of their index sequences,
// which matches the canonical concept order of the context that produces it.
inline Poset boolean_lattice(std::size_t m, const std::string& prefix = "a") {
    if (m > 20) throw CapacityError("boolean lattice on " + std::to_string(m) + " atoms is too large");
    std::vector<Bitset> subsets;
    subsets.reserve(std::size_t{1} << m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Bitset s;
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1) s.set(i);
        subsets.push_back(s);
    }
    std::sort(subsets.begin(), subsets.end(),
              [](const Bitset& a, const Bitset& b) { return seq_lex_less(a, b); });
    std::vector<std::string> labels;
    std::vector<Bitset> rows(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        labels.push_back(detail::subset_label(subsets[i], m, prefix));
        for (std::size_t j = 0; j < subsets.size(); ++j)
            if (subsets[i].subset_of(subsets[j])) rows[i].set(j);
    }
    return Poset(std::move(labels), std::move(rows));
}

struct RelationClassification {
    bool reflexive = false;
    bool transitive = false;
    bool antisymmetric = false;
    std::optional<QuasiOrder> quasi_order; // present when reflexive && transitive
    std::optional<Poset> poset;            // present when additionally antisymmetric
};

// Throws DomainError when the matrix is not square or does not match labels.
inline RelationClassification classify_relation(const std::vector<std::string>& labels,
                                                const std::vector<std::vector<bool>>& rel) {
    detail::check_labels(labels);
    if (rel.size() != labels.size())
        throw DomainError("relation matrix has " + std::to_string(rel.size()) + " rows for " +
                          std::to_string(labels.size()) + " labels");
    std::vector<Bitset> rows(rel.size());
    for (std::size_t i = 0; i < rel.size(); ++i) {
        if (rel[i].size() != labels.size())
            throw DomainError("relation matrix is not square: row " + std::to_string(i) + " has " +
                              std::to_string(rel[i].size()) + " entries");
        for (std::size_t j = 0; j < rel[i].size(); ++j)
            if (rel[i][j]) rows[i].set(j);
    }
    RelationClassification out;
    out.reflexive = !detail::find_irreflexive(rows).has_value();
    out.transitive = !detail::find_intransitive(rows).has_value();
    out.antisymmetric = !detail::find_symmetric_pair(rows).has_value();
    if (out.reflexive && out.transitive) {
        out.quasi_order = QuasiOrder(labels, rows);
        if (out.antisymmetric) out.poset = Poset(labels, rows);
    }
    return out;
}

// Cover pairs (i, j): i < j with nothing strictly between.
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const Poset& p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        Bitset strictly_above = p.upset(i);
        strictly_above.reset(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (!strictly_above.test(j)) continue;
            Bitset between = strictly_above & p.downset(j);
            between.reset(j);
            if (between.none()) out.emplace_back(i, j);
        }
    }
    return out;
}

inline std::optional<std::size_t> meet(const Poset& p, std::size_t a, std::size_t b) {
    Bitset lower = p.downset(a) & p.downset(b);
    for (std::size_t z = 0; z < p.size(); ++z)
        if (lower.test(z) && lower.subset_of(p.downset(z))) return z;
    return std::nullopt;
}

inline std::optional<std::size_t> join(const Poset& p, std::size_t a, std::size_t b) {
    Bitset upper = p.upset(a) & p.upset(b);
    for (std::size_t z = 0; z < p.size(); ++z)
        if (upper.test(z) && upper.subset_of(p.upset(z))) return z;
    return std::nullopt;
}

struct LawViolation {
    std::string law; // "meet", "join" or "distributivity"
    std::array<std::string, 3> elements;
};

struct LatticeCheckReport {
    bool is_lattice = false;
    std::optional<bool> is_distributive; // present only when is_lattice
    std::vector<LawViolation> witnesses;
};

inline LatticeCheckReport lattice_check(const Poset& p, std::size_t max_witnesses = 16) {
    LatticeCheckReport rep;
    const std::size_t n = p.size();
    std::vector<std::vector<int>> meets(n, std::vector<int>(n, -1));
    std::vector<std::vector<int>> joins(n, std::vector<int>(n, -1));
    bool lattice = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            auto mv = meet(p, a, b);
            auto jv = join(p, a, b);
            if (mv) meets[a][b] = meets[b][a] = static_cast<int>(*mv);
            else {
                lattice = false;
                if (rep.witnesses.size() < max_witnesses)
                    rep.witnesses.push_back({"meet", {p.label(a), p.label(b), ""}});
            }
            if (jv) joins[a][b] = joins[b][a] = static_cast<int>(*jv);
            else {
                lattice = false;
                if (rep.witnesses.size() < max_witnesses)
                    rep.witnesses.push_back({"join", {p.label(a), p.label(b), ""}});
            }
        }
    rep.is_lattice = lattice;
    if (!lattice) return rep;

    bool distributive = true;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const int lhs = meets[x][joins[y][z]];
                const int rhs = joins[meets[x][y]][meets[x][z]];
                if (lhs != rhs) {
                    distributive = false;
                    if (rep.witnesses.size() < max_witnesses)
                        rep.witnesses.push_back({"distributivity", {p.label(x), p.label(y), p.label(z)}});
                }
            }
    rep.is_distributive = distributive;
    return rep;
}

struct IsomorphismResult {
    bool isomorphic = false;
    std::map<std::string, std::string> witness; // p label -> q label, empty when not isomorphic
};

namespace detail {

struct IsoSignature {
    std::size_t down, up, covers_up, covers_down;
    bool operator==(const IsoSignature&) const = default;
};

inline std::vector<IsoSignature> iso_signatures(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<IsoSignature> sig(n);
    auto edges = hasse_edges(p);
    for (std::size_t i = 0; i < n; ++i) {
        sig[i].down = p.downset(i).count();
        sig[i].up = p.upset(i).count();
    }
    for (auto [a, b] : edges) {
        sig[a].covers_up++;
        sig[b].covers_down++;
    }
    return sig;
}

} // namespace detail

// Order-isomorphism via backtracking with signature pruning; returns one
// witness mapping when it succeeds. Capped at kMaxIsomorphismElements.
inline IsomorphismResult poset_isomorphic(const Poset& p, const Poset& q) {
    if (p.size() > kMaxIsomorphismElements || q.size() > kMaxIsomorphismElements)
        throw CapacityError("poset isomorphism is capped at " +
                            std::to_string(kMaxIsomorphismElements) + " elements");
    IsomorphismResult res;
    if (p.size() != q.size()) return res;
    const std::size_t n = p.size();
    if (n == 0) {
        res.isomorphic = true;
        return res;
    }

    const auto sp = detail::iso_signatures(p);
    const auto sq = detail::iso_signatures(q);
    std::vector<std::vector<std::size_t>> cands(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (sp[i] == sq[j]) cands[i].push_back(j);
        if (cands[i].empty()) return res;
    }

    // most constrained first
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return cands[a].size() < cands[b].size(); });

    std::vector<int> img(n, -1);
    std::vector<bool> used(n, false);
    auto consistent = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (img[k] < 0) continue;
            const auto jk = static_cast<std::size_t>(img[k]);
            if (p.leq(i, k) != q.leq(j, jk)) return false;
            if (p.leq(k, i) != q.leq(jk, j)) return false;
        }
        return true;
    };
    std::vector<std::size_t> stack;
    auto dfs = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n) return true;
        const std::size_t i = order[depth];
        for (std::size_t j : cands[i]) {
            if (used[j] || !consistent(i, j)) continue;
            img[i] = static_cast<int>(j);
            used[j] = true;
            if (self(self, depth + 1)) return true;
            img[i] = -1;
            used[j] = false;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return res;
    res.isomorphic = true;
    for (std::size_t i = 0; i < n; ++i)
        res.witness[p.label(i)] = q.label(static_cast<std::size_t>(img[i]));
    return res;
}

} // namespace posetmerge
