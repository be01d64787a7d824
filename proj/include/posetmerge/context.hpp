#pragma once

// Formal contexts and the derivation operators, plus the scales that turn a
// poset into a context.

#include <string>
#include <utility>
#include <vector>

#include "posetmerge/bitset.hpp"
#include "posetmerge/errors.hpp"
#include "posetmerge/poset.hpp"

namespace posetmerge {

class FormalContext {
public:
    FormalContext() = default;

    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                  std::vector<Bitset> rows)
        : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
        detail::check_labels(objects_);
        detail::check_labels(attributes_);
        if (rows_.size() != objects_.size())
            throw DomainError("incidence has " + std::to_string(rows_.size()) + " rows for " +
                              std::to_string(objects_.size()) + " objects");
        cols_.assign(attributes_.size(), Bitset{});
        for (std::size_t g = 0; g < objects_.size(); ++g)
            for (std::size_t m = 0; m < attributes_.size(); ++m)
                if (rows_[g].test(m)) cols_[m].set(g);
    }

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<std::string>& attributes() const { return attributes_; }
    std::size_t object_count() const { return objects_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }

    bool incident(std::size_t g, std::size_t m) const { return rows_[g].test(m); }
    const Bitset& row(std::size_t g) const { return rows_[g]; }
    const Bitset& column(std::size_t m) const { return cols_[m]; }

    std::size_t object_index(const std::string& label) const { return index_in(objects_, label); }
    std::size_t attribute_index(const std::string& label) const { return index_in(attributes_, label); }

private:
    static std::size_t index_in(const std::vector<std::string>& v, const std::string& label) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] == label) return i;
        throw DomainError("unknown label '" + label + "'");
    }

    std::vector<std::string> objects_, attributes_;
    std::vector<Bitset> rows_, cols_;
};

// A' = attributes shared by every object in A; the empty set derives to all
// attributes.
inline Bitset derive_objects(const FormalContext& ctx, const Bitset& a) {
    Bitset out = Bitset::prefix(ctx.attribute_count());
    for (std::size_t g = 0; g < ctx.object_count(); ++g)
        if (a.test(g)) out &= ctx.row(g);
    return out;
}

inline Bitset derive_attributes(const FormalContext& ctx, const Bitset& b) {
    Bitset out = Bitset::prefix(ctx.object_count());
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
        if (b.test(m)) out &= ctx.column(m);
    return out;
}

inline Bitset closure_objects(const FormalContext& ctx, const Bitset& a) {
    return derive_attributes(ctx, derive_objects(ctx, a));
}

inline Bitset closure_attributes(const FormalContext& ctx, const Bitset& b) {
    return derive_objects(ctx, derive_attributes(ctx, b));
}

inline bool is_extent(const FormalContext& ctx, const Bitset& a) {
    return closure_objects(ctx, a) == a;
}

inline bool is_intent(const FormalContext& ctx, const Bitset& b) {
    return closure_attributes(ctx, b) == b;
}

// Label-based conveniences; throw DomainError on unknown labels.
inline Bitset object_set(const FormalContext& ctx, const std::vector<std::string>& labels) {
    Bitset s;
    for (const auto& l : labels) s.set(ctx.object_index(l));
    return s;
}

inline Bitset attribute_set(const FormalContext& ctx, const std::vector<std::string>& labels) {
    Bitset s;
    for (const auto& l : labels) s.set(ctx.attribute_index(l));
    return s;
}

// (P, P, <=): the incidence matrix is the order itself.
inline FormalContext ordinal_scale(const QuasiOrder& p) {
    return FormalContext(p.labels(), p.labels(), p.rows());
}

// (P, P, not->): cell (i, j) holds iff j is NOT weakly below i.
inline FormalContext contraordinal_scale(const QuasiOrder& p) {
    const std::size_t n = p.size();
    std::vector<Bitset> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!p.leq(j, i)) rows[i].set(j);
    return FormalContext(p.labels(), p.labels(), std::move(rows));
}

// (M, G, I^{-1})
inline FormalContext dual_context(const FormalContext& ctx) {
    std::vector<Bitset> rows(ctx.attribute_count());
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) rows[m] = ctx.column(m);
    return FormalContext(ctx.attributes(), ctx.objects(), std::move(rows));
}

} // namespace posetmerge
