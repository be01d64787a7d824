#pragma once

// Concept enumeration (NextClosure over attribute sets, lectic order) and the
// concept lattice ordered by extent inclusion.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "posetmerge/bitset.hpp"
#include "posetmerge/context.hpp"
#include "posetmerge/errors.hpp"
#include "posetmerge/poset.hpp"

namespace posetmerge {

inline constexpr std::size_t kDefaultMaxConcepts = std::size_t{1} << 20;

struct FormalConcept {
    Bitset extent;
    Bitset intent;
    bool operator==(const FormalConcept&) const = default;
};

// gamma g = ({g}'', {g}')
inline FormalConcept object_concept(const FormalContext& ctx, const std::string& g) {
    const Bitset s = Bitset::single(ctx.object_index(g));
    const Bitset intent = derive_objects(ctx, s);
    return {derive_attributes(ctx, intent), intent};
}

// mu m = ({m}', {m}'')
inline FormalConcept attribute_concept(const FormalContext& ctx, const std::string& m) {
    const Bitset s = Bitset::single(ctx.attribute_index(m));
    const Bitset extent = derive_attributes(ctx, s);
    return {extent, derive_objects(ctx, extent)};
}

namespace detail {

// All closed attribute sets in lectic order (Ganter's NextClosure).
inline std::vector<Bitset> closed_attribute_sets(const FormalContext& ctx, std::size_t max_concepts) {
    const std::size_t m = ctx.attribute_count();
    std::vector<Bitset> out;
    Bitset b = closure_attributes(ctx, Bitset{});
    out.push_back(b);
    while (true) {
        bool advanced = false;
        for (std::size_t ii = m; ii-- > 0;) {
            if (b.test(ii)) {
                b.reset(ii);
                continue;
            }
            Bitset cand = b;
            cand.set(ii);
            const Bitset closed = closure_attributes(ctx, cand);
            const Bitset added = closed - b;
            if (added.lowest_bit() >= static_cast<int>(ii)) {
                b = closed;
                out.push_back(b);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
        if (out.size() > max_concepts)
            throw CapacityError("concept enumeration exceeded the cap of " +
                                std::to_string(max_concepts));
    }
    return out;
}

} // namespace detail

class ConceptLattice {
public:
    ConceptLattice() = default;

    ConceptLattice(FormalContext ctx, std::vector<FormalConcept> concepts)
        : ctx_(std::move(ctx)), concepts_(std::move(concepts)) {
        for (std::size_t i = 0; i < concepts_.size(); ++i) extent_index_[concepts_[i].extent] = i;
    }

    const FormalContext& context() const { return ctx_; }
    std::size_t size() const { return concepts_.size(); }
    const FormalConcept& at(std::size_t i) const { return concepts_[i]; }
    const std::vector<FormalConcept>& concepts() const { return concepts_; }

    bool leq(std::size_t i, std::size_t j) const {
        return concepts_[i].extent.subset_of(concepts_[j].extent);
    }

    std::size_t index_of_extent(const Bitset& extent) const {
        auto it = extent_index_.find(extent);
        if (it == extent_index_.end()) throw DomainError("no concept with the requested extent");
        return it->second;
    }

    std::size_t index_of(const FormalConcept& c) const { return index_of_extent(c.extent); }

    std::size_t bottom_index() const { return index_of_extent(concept_bottom()); }
    std::size_t top_index() const { return index_of_extent(Bitset::prefix(ctx_.object_count())); }

    std::string concept_label(std::size_t i) const { return extent_label(i); }

    // Poset on the concepts, labeled by their extents.
    Poset to_poset() const {
        if (size() > Bitset::capacity())
            throw CapacityError("concept lattice with " + std::to_string(size()) +
                                " concepts cannot be converted to a poset");
        std::vector<std::string> labels;
        std::vector<Bitset> rows(size());
        labels.reserve(size());
        for (std::size_t i = 0; i < size(); ++i) {
            labels.push_back(extent_label(i));
            for (std::size_t j = 0; j < size(); ++j)
                if (leq(i, j)) rows[i].set(j);
        }
        return Poset(std::move(labels), std::move(rows));
    }

private:
    std::string extent_label(std::size_t i) const {
        std::string out = "{";
        bool first = true;
        for (std::size_t g = 0; g < ctx_.object_count(); ++g) {
            if (!concepts_[i].extent.test(g)) continue;
            if (!first) out += ",";
            out += ctx_.objects()[g];
            first = false;
        }
        return out + "}";
    }

    Bitset concept_bottom() const {
        Bitset b = Bitset::prefix(ctx_.object_count());
        for (const auto& c : concepts_) b &= c.extent;
        return b;
    }

    FormalContext ctx_;
    std::vector<FormalConcept> concepts_;
    std::map<Bitset, std::size_t, Bitset::WordLess> extent_index_;
};

// Complete, duplicate-free concept set, sorted by the lexicographic order of
// the extents' index sequences. Deterministic.
inline ConceptLattice all_concepts(const FormalContext& ctx,
                                   std::size_t max_concepts = kDefaultMaxConcepts) {
    auto intents = detail::closed_attribute_sets(ctx, max_concepts);
    std::vector<FormalConcept> concepts;
    concepts.reserve(intents.size());
    for (const auto& b : intents) concepts.push_back({derive_attributes(ctx, b), b});
    std::sort(concepts.begin(), concepts.end(), [](const FormalConcept& a, const FormalConcept& b) {
        return seq_lex_less(a.extent, b.extent);
    });
    return ConceptLattice(ctx, std::move(concepts));
}

// The concept lattice of the ordinal scale: the smallest complete lattice
// containing p, with p embedded through the object-concept map.
inline ConceptLattice dm_completion(const Poset& p, std::size_t max_concepts = kDefaultMaxConcepts) {
    return all_concepts(ordinal_scale(p), max_concepts);
}

} // namespace posetmerge
