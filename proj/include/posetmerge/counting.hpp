#pragma once

// Closed-form counters, all exact over arbitrary-precision integers. Each one
// is paired with a brute-force enumeration oracle in the test suite.

#include <cassert>
#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "posetmerge/errors.hpp"

namespace posetmerge {

using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigCount ipow(BigCount base, unsigned long long exp) {
    BigCount out = 1;
    while (exp) {
        if (exp & 1) out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

// Integer power with the 0^0 = 0 convention used inside the monotone-coloring
// formula (everywhere else 0^0 is the usual empty product 1).
inline BigCount ipow_zero_to_zero(const BigCount& base, unsigned long long exp) {
    if (base == 0 && exp == 0) return 0;
    return ipow(base, exp);
}

inline BigCount binomial(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount out = 1;
    for (unsigned long long i = 1; i <= k; ++i) {
        out *= BigCount(n - k + i);
        out /= BigCount(i);
    }
    return out;
}

inline BigCount factorial(unsigned long long n) {
    BigCount out = 1;
    for (unsigned long long i = 2; i <= n; ++i) out *= BigCount(i);
    return out;
}

// Number of plane partitions in the m x n box with parts at most l, as the
// triple product (i+j+k-1)/(i+j+k-2), accumulated as an exact rational. The
// result is provably integral; a non-unit denominator would mean a transcription
// slip, so it is a hard error.
inline BigCount macmahon(std::size_t m, std::size_t n, int l) {
    if (l < 0) throw DomainError("macmahon: the part bound must be nonnegative");
    BigRational acc = 1;
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (int k = 1; k <= l; ++k)
                acc *= BigRational(BigCount(i + j + static_cast<std::size_t>(k) - 1),
                                   BigCount(i + j + static_cast<std::size_t>(k) - 2));
    if (boost::multiprecision::denominator(acc) != 1)
        throw DomainError("macmahon: product did not reduce to an integer");
    return boost::multiprecision::numerator(acc);
}

// Nar(N, M) = (1/N) C(N,M) C(N,M-1), defined for 1 <= M <= N.
inline BigCount narayana(unsigned long long n, unsigned long long m) {
    if (m < 1 || m > n)
        throw DomainError("narayana is defined for 1 <= M <= N, got N=" + std::to_string(n) +
                          " M=" + std::to_string(m));
    BigCount prod = binomial(n, m) * binomial(n, m - 1);
    assert(prod % BigCount(n) == 0);
    return prod / BigCount(n);
}

// Proper mergings of an m-chain and an n-chain:
// (1/(n+m+1)) C(n+m+1, m+1) C(n+m+1, m).
inline BigCount count_chain_mergings(std::size_t m, std::size_t n) {
    const unsigned long long t = m + n + 1;
    BigCount prod = binomial(t, m + 1) * binomial(t, m);
    assert(prod % BigCount(t) == 0);
    BigCount out = prod / BigCount(t);
    assert(out == macmahon(m, n, 2));
    assert(out == narayana(t, m + 1));
    return out;
}

// Proper mergings of an m-antichain and an n-antichain: the signed sum over
// the compositions n1+m1+k1 = m of m!/(n1! m1! k1!) (-1)^k1 (2^n1+2^m1-1)^n.
inline BigCount count_antichain_mergings(std::size_t m, std::size_t n) {
    const BigCount mfact = factorial(m);
    BigCount out = 0;
    for (std::size_t n1 = 0; n1 <= m; ++n1)
        for (std::size_t m1 = 0; n1 + m1 <= m; ++m1) {
            const std::size_t k1 = m - n1 - m1;
            BigCount multinomial = mfact / (factorial(n1) * factorial(m1) * factorial(k1));
            const BigCount base = ipow(2, n1) + ipow(2, m1) - 1;
            BigCount term = multinomial * ipow(base, n);
            if (k1 % 2 == 1) term = -term;
            out += term;
        }
    assert(out >= 0);
    return out;
}

// Monotone k-colorings of the complete bipartite digraph K_{m1,m2}:
// sum over i=1..k of ((k+1-i)^m1 - (k-i)^m1) i^m2, with 0^0 read as 0.
inline BigCount eta(std::size_t k, std::size_t m1, std::size_t m2) {
    BigCount out = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        const BigCount rising = ipow_zero_to_zero(BigCount(k + 1 - i), m1) -
                                ipow_zero_to_zero(BigCount(k - i), m1);
        out += rising * ipow(BigCount(i), m2);
    }
    return out;
}

// The second displayed form of the same count; used as an internal cross-check.
inline BigCount eta_second_form(std::size_t k, std::size_t m1, std::size_t m2) {
    BigCount out = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        const BigCount rising = ipow_zero_to_zero(BigCount(k + 1 - i), m2) -
                                ipow_zero_to_zero(BigCount(k - i), m2);
        out += rising * ipow(BigCount(i), m1);
    }
    return out;
}

// Proper mergings of an m-antichain and an n-chain; the m = 0 case yields 1
// through the 0^0 = 0 convention inside eta.
inline BigCount count_antichain_chain(std::size_t m, std::size_t n) {
    return eta(n + 1, m, m);
}

// Galois connections between an m-chain and an n-chain: C(m+n-2, m-1).
inline BigCount count_galois_chains(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1)
        throw DomainError("count_galois_chains needs chains with at least one element");
    return binomial(m + n - 2, m - 1);
}

// Galois connections between the Boolean lattice with 2^m elements and a chain
// with n+1 elements: (n+1)^m.
inline BigCount count_galois_boolean_chain(std::size_t m, std::size_t n) {
    return ipow(BigCount(n + 1), m);
}

} // namespace posetmerge
