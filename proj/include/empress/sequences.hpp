#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "empress/errors.hpp"
#include "empress/integer.hpp"
#include "empress/rational.hpp"
#include "empress/table.hpp"
#include "empress/words.hpp"

// Direct (non-search) P-position generators and the arithmetic functions
// they rest on. Everything here is exact integer or rational arithmetic.

namespace empress {

// Least nonnegative integer not in s.
inline std::int64_t mex(std::span<const std::int64_t> s) {
    std::vector<bool> seen(s.size() + 1, false);
    for (std::int64_t v : s)
        if (v >= 0 && v <= std::int64_t(s.size())) seen[static_cast<std::size_t>(v)] = true;
    std::int64_t m = 0;
    while (seen[static_cast<std::size_t>(m)]) ++m;
    return m;
}

// Least element of {2, 4, 6, ...} not in s; s must contain even numbers only.
// Zero is never a candidate (the excludant lives in the doubled positive
// integers: mex2({2,4,6,10,14}) = 8), though s may contain it.
inline std::int64_t mex2(std::span<const std::int64_t> s) {
    std::vector<std::int64_t> halved;
    halved.reserve(s.size() + 1);
    halved.push_back(0);
    for (std::int64_t v : s) {
        if (v % 2 != 0) throw ParameterError("mex2 is defined on even numbers only");
        halved.push_back(v / 2);
    }
    return 2 * mex(halved);
}

// Vile numbers end with an even number of zeros in binary (A003159); the
// dopey numbers (A036554) are exactly their doubles.
inline bool is_vile(std::int64_t n) {
    if (n < 1) throw ParameterError("vile/dopey numbers are positive");
    return __builtin_ctzll(static_cast<unsigned long long>(n)) % 2 == 0;
}

// Incrementally extended table of vile numbers, 1-based.
class VileSequence {
public:
    std::int64_t operator()(std::size_t n) {
        if (n < 1) throw ParameterError("sequence index must be >= 1");
        while (values_.size() < n) {
            ++candidate_;
            if (is_vile(candidate_)) values_.push_back(candidate_);
        }
        return values_[n - 1];
    }

private:
    std::vector<std::int64_t> values_;
    std::int64_t candidate_ = 0;
};

inline std::int64_t vile(std::size_t n) {
    VileSequence seq;
    return seq(n);
}

inline std::int64_t dopey(std::size_t n) { return 2 * vile(n); }

// Queen Bee P-positions: (vile(n), 2 vile(n)).
inline PPair queen_bee_pair(std::size_t n) {
    const std::int64_t a = vile(n);
    return {a, 2 * a};
}

inline PPositionTable queen_bee_pairs(std::size_t count) {
    if (count < 1) throw ParameterError("count must be >= 1");
    VileSequence seq;
    std::vector<PPair> rows(count);
    for (std::size_t n = 1; n <= count; ++n) {
        const std::int64_t a = seq(n);
        rows[n - 1] = {a, 2 * a};
    }
    return PPositionTable(std::move(rows));
}

// Incremental state of the 2-Queen-Dee construction: membership of the
// coordinate set A u B and of the even set D u S (differences b-a and sums
// a+b), seeded with the origin pair so that all four sets start as {0}.
// Each step takes
//     a_{n+1} = mex(A_n u B_n),   b_{n+1} - a_{n+1} = mex2(D_n u S_n).
// Both excludants are monotone, so a cursor per set gives amortized O(1).
class MexState {
public:
    MexState() {
        ab_.assign(1, true);
        ds_.assign(1, true);
    }

    PPair step() {
        while (in(ab_, ab_cursor_)) ++ab_cursor_;
        const std::int64_t a = ab_cursor_;
        while (in(ds_, ds_cursor_)) ds_cursor_ += 2;
        const std::int64_t d = ds_cursor_;
        const std::int64_t b = a + d;
        mark(ab_, a);
        mark(ab_, b);
        mark(ds_, d);
        mark(ds_, a + b);
        ++generated_;
        return {a, b};
    }

    std::size_t generated() const { return generated_; }
    bool in_ab(std::int64_t v) const { return in(ab_, v); }
    bool in_ds(std::int64_t v) const { return in(ds_, v); }

private:
    static bool in(const std::vector<bool>& bits, std::int64_t v) {
        return v >= 0 && v < std::int64_t(bits.size()) && bits[static_cast<std::size_t>(v)];
    }
    static void mark(std::vector<bool>& bits, std::int64_t v) {
        if (v >= std::int64_t(bits.size())) bits.resize(static_cast<std::size_t>(v) + 1, false);
        bits[static_cast<std::size_t>(v)] = true;
    }

    std::vector<bool> ab_, ds_;
    std::int64_t ab_cursor_ = 1;
    std::int64_t ds_cursor_ = 2;
    std::size_t generated_ = 0;
};

inline PPositionTable two_queen_dee_pairs(std::size_t count) {
    if (count < 1) throw ParameterError("count must be >= 1");
    MexState state;
    std::vector<PPair> rows(count);
    for (std::size_t n = 0; n < count; ++n) rows[n] = state.step();
    return PPositionTable(std::move(rows));
}

// Queen Dee table from the 2-Queen-Dee one: (alpha, beta) = ((b-a)/2, (b+a)/2).
inline PPositionTable queen_dee_pairs(std::size_t count) {
    const PPositionTable two = two_queen_dee_pairs(count);
    std::vector<PPair> rows(count);
    for (std::size_t n = 1; n <= count; ++n) {
        const auto [a, b] = two.pair(n);
        if ((b - a) % 2 != 0)
            throw std::logic_error("2-Queen-Dee pair with odd difference");
        rows[n - 1] = {(b - a) / 2, (b + a) / 2};
    }
    return PPositionTable(std::move(rows));
}

// Exact floor(n * psi_k) for psi_k = (2-k+sqrt(k^2+4))/2, the quadratic with
// continued fraction [1;k,k,k,...]. Since psi_k is irrational,
//   floor(n*psi_k) = floor((n(2-k) + floor(sqrt(n^2 (k^2+4)))) / 2)
// holds in exact integer arithmetic.
inline std::int64_t beatty_psi(std::int64_t k, std::int64_t n) {
    if (k < 1) throw ParameterError("beatty_psi requires k >= 1");
    if (n < 1) throw ParameterError("beatty_psi requires n >= 1");
    const uint128 nn = uint128(n) * uint128(n);
    const uint128 kk = uint128(k) * uint128(k) + 4;
    const uint128 prod = nn * kk;
    if (kk != 0 && prod / kk != nn) throw OverflowError("beatty_psi radicand exceeds 128 bits");
    const int128 root = int128(isqrt_u128(prod));
    const int128 linear = int128(n) * int128(2 - k);
    const int128 sum = linear + root;
    if (sum < 0) throw std::logic_error("beatty_psi internal sign error");
    const int128 result = sum / 2;
    return static_cast<std::int64_t>(result);
}

// Holladay k-Queen P-position: (floor(n psi_k), floor(n psi_k) + k n).
inline PPair holladay_pair(std::int64_t k, std::size_t n) {
    const std::int64_t a = beatty_psi(k, std::int64_t(n));
    return {a, a + k * std::int64_t(n)};
}

inline PPositionTable holladay_pairs(std::int64_t k, std::size_t count) {
    if (count < 1) throw ParameterError("count must be >= 1");
    std::vector<PPair> rows(count);
    for (std::size_t n = 1; n <= count; ++n) rows[n - 1] = holladay_pair(k, n);
    return PPositionTable(std::move(rows));
}

// The Queen Bee index function f(x) = sum_j [x / 2^(2j+1)] with [.] rounding
// half up; n = f(a_n). Terms vanish once 2^(2j) > x, and each term is
//   [x / 2^(2j+1)] = (2x + 2^(2j+1)) div 2^(2j+2)
// in plain integer arithmetic.
inline std::int64_t f_queen_bee(std::int64_t x) {
    if (x < 1) throw ParameterError("f_queen_bee requires x >= 1");
    if (x >= (std::int64_t(1) << 61)) throw OverflowError("f_queen_bee domain exceeded");
    std::int64_t total = 0;
    for (int j = 0; (std::int64_t(1) << (2 * j)) <= x; ++j) {
        const std::int64_t half = std::int64_t(1) << (2 * j + 1);
        total += (2 * x + half) / (2 * half);
    }
    return total;
}

// Exact h(x) = sum_{j>=0} of the distance from x/4^j to the nearest integer.
// Terms with 4^j <= 2x are summed explicitly; beyond that each term is x/4^j
// itself, so the remainder telescopes to x / (3 * 4^J).
inline Rational nearest_integer_distance_sum(uint128 x) {
    if (x == 0) return Rational(0);
    if (x >= (uint128(1) << 124)) throw OverflowError("distance sum domain exceeds 128 bits");
    unsigned last = 0;
    while (pow4_u128(last + 1) <= 2 * x) ++last;
    Rational total(0);
    for (unsigned j = 0; j <= last; ++j) {
        const uint128 p = pow4_u128(j);
        const uint128 r = x % p;
        const uint128 dist = r <= p - r ? r : p - r;
        total = total + Rational(int128(dist), int128(p));
    }
    return total + Rational(int128(x), checked_mul(3, int128(pow4_u128(last))));
}

inline Rational nearest_integer_distance_sum(std::int64_t x) {
    if (x < 0) throw ParameterError("distance sum requires x >= 0");
    return nearest_integer_distance_sum(uint128(x));
}

// Tables of the widened-scope family via their morphisms: a -> a^k b, b -> a^j.
inline PPositionTable fraenkel_pairs(std::int64_t k, std::int64_t j, std::size_t count) {
    return morphic_table(morphisms::fraenkel(k, j), "", 'a', 'b', count);
}

// Restricted-stroll tables via a -> a^(k-j) b a^j, b -> a; the rows satisfy
// b_n = a_n + k n - j, which is checked on every call.
inline PPositionTable restricted_pairs(std::int64_t k, std::int64_t j, std::size_t count) {
    PPositionTable t = morphic_table(morphisms::restricted(k, j), "", 'a', 'b', count);
    for (std::size_t n = 1; n <= count; ++n)
        if (t.b(n) != t.a(n) + k * std::int64_t(n) - j)
            throw std::logic_error("restricted table violates b = a + k n - j");
    return t;
}

} // namespace empress
