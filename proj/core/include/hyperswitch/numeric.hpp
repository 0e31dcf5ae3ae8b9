// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic helpers. Thresholds of the form n^{1/4} d^{1/2} and
// n^{3/4} d are irrational, so every comparison against them is carried
// out on fourth powers in integer/rational arithmetic. Nothing in here
// touches floating point.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace hsw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// a <= n^{1/4} d^{1/2}  iff  a^4 <= n d^2 (a >= 0).
inline bool leq_loop_limit(std::int64_t a, std::int64_t n, std::int64_t d) {
    if (a < 0) return true;
    unsigned __int128 a2 = static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(a);
    // a <= nd/k < 2^24 at supported scales, so a^2 < 2^48 and a^4 < 2^96.
    unsigned __int128 a4 = a2 * a2;
    unsigned __int128 lim = static_cast<unsigned __int128>(n) *
                            static_cast<unsigned __int128>(d) *
                            static_cast<unsigned __int128>(d);
    return a4 <= lim;
}

// a >= n^{1/4} d^{1/2}  iff  a >= 0 and a^4 >= n d^2.
inline bool geq_loop_limit(std::int64_t a, std::int64_t n, std::int64_t d) {
    if (a < 0) return false;
    unsigned __int128 a2 = static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(a);
    unsigned __int128 a4 = a2 * a2;
    unsigned __int128 lim = static_cast<unsigned __int128>(n) *
                            static_cast<unsigned __int128>(d) *
                            static_cast<unsigned __int128>(d);
    return a4 >= lim;
}

// |x| <= n^{3/4} d for rational x, via x^4 <= n^3 d^4.
inline bool within_phi_band(const Rational& x, std::int64_t n, std::int64_t d) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);  // positive by construction
    BigInt lhs = num * num;
    lhs *= lhs;
    BigInt d2 = BigInt(d) * d;
    BigInt rhs = BigInt(n) * n * n * d2 * d2;
    BigInt den2 = den * den;
    rhs *= den2 * den2;
    return lhs <= rhs;
}

inline BigInt pow4(const BigInt& v) {
    BigInt s = v * v;
    return s * s;
}

}  // namespace hsw
