#pragma once

// Fixed-capacity bitset over 64-bit words. Every ground set, extent, intent
// and relation row in this library is one of these, so the brute-force loops
// stay word-parallel. Capacity is a compile-time knob: define
// POSETMERGE_BITSET_WORDS to raise the 64-element default cap.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#ifndef POSETMERGE_BITSET_WORDS
#define POSETMERGE_BITSET_WORDS 1
#endif

namespace posetmerge {

class Bitset {
public:
    static constexpr std::size_t kWords = POSETMERGE_BITSET_WORDS;

    static constexpr std::size_t capacity() { return kWords * 64; }

    constexpr Bitset() = default;

    // Set containing the first n indices.
    static Bitset prefix(std::size_t n) {
        Bitset b;
        for (std::size_t w = 0; w < kWords && n > 0; ++w) {
            const std::size_t take = n < 64 ? n : 64;
            b.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
            n -= take;
        }
        return b;
    }

    static Bitset single(std::size_t i) {
        Bitset b;
        b.set(i);
        return b;
    }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    // -1 when empty.
    int lowest_bit() const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
        return -1;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

    // Set difference: *this minus o.
    friend Bitset operator-(Bitset a, const Bitset& b) {
        for (std::size_t w = 0; w < kWords; ++w) a.words_[w] &= ~b.words_[w];
        return a;
    }

    // Complement within the universe of the first n indices.
    Bitset complement(std::size_t n) const { return prefix(n) ^ *this; }

    bool subset_of(const Bitset& o) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    bool operator==(const Bitset&) const = default;

    // Arbitrary but fixed total order, fine for map keys and dedup.
    friend bool word_less(const Bitset& a, const Bitset& b) {
        for (std::size_t w = kWords; w-- > 0;)
            if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
        return false;
    }

    // Lexicographic order of the ascending index sequences, e.g.
    // {} < {0} < {0,2} < {0,3} < {1}. Used for the canonical concept order.
    friend bool seq_lex_less(const Bitset& a, const Bitset& b) {
        const Bitset d = a ^ b;
        const int i = d.lowest_bit();
        if (i < 0) return false;
        const Bitset& other = a.test(static_cast<std::size_t>(i)) ? b : a;
        Bitset high = other - prefix(static_cast<std::size_t>(i) + 1);
        if (high.any()) return a.test(static_cast<std::size_t>(i));
        // the set without bit i ran out of elements: it is a strict prefix
        return !a.test(static_cast<std::size_t>(i));
    }

    std::vector<std::size_t> indices(std::size_t n) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    struct WordLess {
        bool operator()(const Bitset& a, const Bitset& b) const { return word_less(a, b); }
    };

private:
    std::array<std::uint64_t, kWords> words_{};
};

} // namespace posetmerge
