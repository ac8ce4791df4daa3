#pragma once

#include <cstdint>
#include <string>

#include "empress/errors.hpp"

// Exact 128-bit integer helpers. Everything in the closed-form module runs on
// integers or exact rationals; there is no floating point on any result path.

namespace empress {

using int128 = __int128;
using uint128 = unsigned __int128;

inline std::string to_string_u128(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

inline std::string to_string_i128(int128 v) {
    if (v < 0) return "-" + to_string_u128(uint128(-v));
    return to_string_u128(uint128(v));
}

// Largest r with r*r <= n (Newton iteration; exact).
inline uint128 isqrt_u128(uint128 n) {
    if (n < 2) return n;
    uint128 x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiply overflow");
    return r;
}

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit add overflow");
    return r;
}

// 4^e as a 128-bit integer; exact for e <= 63.
inline uint128 pow4_u128(unsigned e) {
    if (e > 63) throw OverflowError("4^e exceeds 128 bits");
    return uint128(1) << (2 * e);
}

} // namespace empress
