#pragma once

// Mergings of a linearly ordered family of chains, built from arrangements of
// plane partitions (one partition per pair of chains) and validated by
// closing first and then checking restrictions and properness.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetmerge/bitset.hpp"
#include "posetmerge/errors.hpp"
#include "posetmerge/merging.hpp"
#include "posetmerge/plane_partition.hpp"
#include "posetmerge/poset.hpp"

namespace posetmerge {

// One plane partition with parts at most 2 for every pair i < j of chains;
// the partition for (i, j) has sizes[i] rows and sizes[j] columns.
struct Arrangement {
    std::vector<std::size_t> chain_sizes;
    std::map<std::pair<std::size_t, std::size_t>, PlanePartition> partitions;
};

struct ArrangementResult {
    QuasiOrder relation;  // reflexive-transitive closure of the induced relation
    bool restrictions_ok; // the closure restricted to each chain is that chain again
    bool proper;          // no cross pair present in both directions
    bool is_proper_merging() const { return restrictions_ok && proper; }
};

namespace detail {

inline std::string chain_prefix(std::size_t t) {
    if (t >= 26) throw CapacityError("at most 26 chains are supported");
    return std::string(1, static_cast<char>('a' + t));
}

} // namespace detail

inline ArrangementResult arrangement_to_relation(const Arrangement& a) {
    const std::size_t t = a.chain_sizes.size();
    std::vector<std::size_t> offset(t + 1, 0);
    for (std::size_t i = 0; i < t; ++i) offset[i + 1] = offset[i] + a.chain_sizes[i];
    const std::size_t total = offset[t];
    if (total > Bitset::capacity()) throw CapacityError("combined ground set exceeds the bitset capacity");

    std::vector<std::string> labels;
    std::vector<Bitset> rows(total);
    for (std::size_t i = 0; i < t; ++i) {
        const std::string prefix = detail::chain_prefix(i);
        for (std::size_t e = 0; e < a.chain_sizes[i]; ++e) {
            labels.push_back(prefix + std::to_string(e + 1));
            // chain order within block i
            for (std::size_t f = e; f < a.chain_sizes[i]; ++f) rows[offset[i] + e].set(offset[i] + f);
        }
    }
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j) {
            auto it = a.partitions.find({i, j});
            if (it == a.partitions.end())
                throw DomainError("arrangement lacks a partition for the chain pair (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            const PlanePartition& pp = it->second;
            if (pp.rows != a.chain_sizes[i] || pp.cols != a.chain_sizes[j])
                throw DomainError("partition for chain pair (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ") has the wrong shape");
            validate_plane_partition(pp);
            for (std::size_t r = 0; r < pp.rows; ++r)
                for (std::size_t c = 0; c < pp.cols; ++c) {
                    const std::size_t colelt = pp_col_to_chain_index(pp.cols, c);
                    if (pp.parts[r][c] > 2)
                        throw DomainError("generalized mergings need parts at most 2");
                    if (pp.parts[r][c] == 2) rows[offset[i] + r].set(offset[j] + colelt);
                    if (pp.parts[r][c] == 0) rows[offset[j] + colelt].set(offset[i] + r);
                }
        }

    rows = reflexive_transitive_closure(std::move(rows));
    ArrangementResult out{QuasiOrder(labels, rows), true, true};
    // restriction check: within block i the closure must still be the chain
    for (std::size_t i = 0; i < t && out.restrictions_ok; ++i)
        for (std::size_t e = 0; e < a.chain_sizes[i] && out.restrictions_ok; ++e)
            for (std::size_t f = 0; f < a.chain_sizes[i]; ++f)
                if (rows[offset[i] + e].test(offset[i] + f) != (e <= f)) {
                    out.restrictions_ok = false;
                    break;
                }
    // properness on the closed relation: no pair related in both directions
    // across two different chains
    for (std::size_t x = 0; x < total && out.proper; ++x)
        for (std::size_t y = x + 1; y < total; ++y)
            if (rows[x].test(y) && rows[y].test(x)) {
                out.proper = false;
                break;
            }
    return out;
}

struct GeneralizedFamily {
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> offsets; // sizes.size() + 1 entries
    std::size_t arrangement_count = 0;
    std::size_t proper_count = 0; // arrangements that induce a proper merging
    std::vector<QuasiOrder> mergings; // distinct proper mergings, sorted by relation bits
    std::vector<std::optional<std::size_t>> fibers; // arrangement index -> merging index

    std::size_t size() const { return mergings.size(); }

    // R below S iff the (s,t)-block of R is within S for s < t and contains it
    // for s > t. Diagonal blocks always agree.
    bool leq(std::size_t i, std::size_t j) const {
        const std::size_t t = sizes.size();
        for (std::size_t s = 0; s < t; ++s)
            for (std::size_t u = 0; u < t; ++u) {
                if (s == u) continue;
                for (std::size_t x = offsets[s]; x < offsets[s + 1]; ++x)
                    for (std::size_t y = offsets[u]; y < offsets[u + 1]; ++y) {
                        const bool ri = mergings[i].leq(x, y);
                        const bool rj = mergings[j].leq(x, y);
                        if (s < u && ri && !rj) return false;
                        if (s > u && rj && !ri) return false;
                    }
            }
        return true;
    }

    Poset to_poset() const {
        if (size() > Bitset::capacity())
            throw CapacityError("generalized merging family is too large for a poset");
        std::vector<std::string> labels;
        std::vector<Bitset> rows(size());
        for (std::size_t i = 0; i < size(); ++i) {
            labels.push_back("g" + std::to_string(i));
            for (std::size_t j = 0; j < size(); ++j)
                if (leq(i, j)) rows[i].set(j);
        }
        return Poset(std::move(labels), std::move(rows));
    }
};

// All arrangements over the given chain sizes, deduplicated into the distinct
// proper generalized mergings they induce.
inline GeneralizedFamily enumerate_generalized(const std::vector<std::size_t>& sizes,
                                               const Limits& limits = {}) {
    const std::size_t t = sizes.size();
    GeneralizedFamily fam;
    fam.sizes = sizes;
    fam.offsets.assign(t + 1, 0);
    for (std::size_t i = 0; i < t; ++i) fam.offsets[i + 1] = fam.offsets[i] + sizes[i];

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j) pairs.emplace_back(i, j);
    std::vector<std::vector<PlanePartition>> choices;
    unsigned long long count = 1;
    for (auto [i, j] : pairs) {
        choices.push_back(enumerate_plane_partitions(sizes[i], sizes[j], 2, limits));
        count *= choices.back().size();
        if (count > limits.max_items)
            throw CapacityError("too many arrangements to enumerate");
    }

    std::vector<QuasiOrder> raw; // proper mergings per arrangement, with duplicates
    std::vector<std::optional<std::size_t>> raw_ok; // raw index per arrangement
    Arrangement cur;
    cur.chain_sizes = sizes;
    auto rec = [&](auto&& self, std::size_t pi) -> void {
        if (pi == pairs.size()) {
            fam.arrangement_count++;
            const ArrangementResult res = arrangement_to_relation(cur);
            if (res.is_proper_merging()) {
                fam.proper_count++;
                raw_ok.push_back(raw.size());
                raw.push_back(res.relation);
            } else {
                raw_ok.push_back(std::nullopt);
            }
            return;
        }
        for (const auto& pp : choices[pi]) {
            cur.partitions[pairs[pi]] = pp;
            self(self, pi + 1);
        }
        cur.partitions.erase(pairs[pi]);
    };
    rec(rec, 0);

    // dedupe by exact relation matrices under the fixed labeling
    std::vector<std::size_t> sorted_raw(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) sorted_raw[i] = i;
    auto rel_less = [&](std::size_t x, std::size_t y) {
        const auto& a = raw[x].rows();
        const auto& b = raw[y].rows();
        for (std::size_t r = 0; r < a.size(); ++r) {
            const Bitset d = a[r] ^ b[r];
            const int j = d.lowest_bit();
            if (j >= 0) return !a[r].test(static_cast<std::size_t>(j));
        }
        return false;
    };
    std::sort(sorted_raw.begin(), sorted_raw.end(), rel_less);
    std::vector<std::size_t> raw_to_merged(raw.size());
    for (std::size_t idx : sorted_raw) {
        if (!fam.mergings.empty() && fam.mergings.back().rows() == raw[idx].rows()) {
            raw_to_merged[idx] = fam.size() - 1;
        } else {
            fam.mergings.push_back(raw[idx]);
            raw_to_merged[idx] = fam.size() - 1;
        }
    }
    fam.fibers.reserve(raw_ok.size());
    for (const auto& r : raw_ok)
        fam.fibers.push_back(r ? std::optional<std::size_t>(raw_to_merged[*r]) : std::nullopt);
    return fam;
}

} // namespace posetmerge
