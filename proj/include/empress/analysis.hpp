#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "empress/errors.hpp"
#include "empress/rational.hpp"
#include "empress/sequences.hpp"
#include "empress/table.hpp"

// Cross-verification between the oracle, morphic, and closed-form tables,
// plus the residual experiments around a_{b_n} = a_n + b_n (+-1).

namespace empress {

// Index (1-based) of the first differing pair, or nullopt when the first
// `count` pairs agree.
inline std::optional<std::size_t> check_equivalence(const PPositionTable& t1,
                                                    const PPositionTable& t2, std::size_t count) {
    if (t1.size() < count || t2.size() < count)
        throw ParameterError("tables shorter than the requested comparison length");
    for (std::size_t n = 1; n <= count; ++n)
        if (t1.pair(n) != t2.pair(n)) return n;
    return std::nullopt;
}

struct Residual {
    std::int64_t n = 0;
    std::int64_t r = 0; // a_{b_n} - a_n - b_n
    bool operator==(const Residual&) const = default;
};

struct Eq1Report {
    std::vector<Residual> residuals;  // n = 1..n_max
    std::vector<Residual> violations; // entries with r outside {0, -1}
    std::int64_t max_abs = 0;

    bool holds() const { return violations.empty(); }
};

// Residuals r_n = a_lookup(b_n) - a_n - b_n for n <= n_max; a_lookup(i) must
// be valid up to the largest b_n.
template <class ALookup>
Eq1Report check_eq1(const PPositionTable& pairs, ALookup&& a_lookup, std::size_t n_max) {
    if (pairs.size() < n_max) throw ParameterError("table shorter than n_max");
    Eq1Report report;
    report.residuals.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::int64_t a = pairs.a(n), b = pairs.b(n);
        const std::int64_t r = a_lookup(static_cast<std::size_t>(b)) - a - b;
        report.residuals.push_back({std::int64_t(n), r});
        if (r != 0 && r != -1) report.violations.push_back({std::int64_t(n), r});
        report.max_abs = std::max(report.max_abs, r >= 0 ? r : -r);
    }
    return report;
}

enum class Eq1Target { QueenDee, TwoQueenDee, QueenBee, TwoOneQueen };

inline Eq1Report eq1_report(Eq1Target target, std::size_t n_max) {
    if (n_max < 1) throw ParameterError("n_max must be >= 1");
    switch (target) {
    case Eq1Target::QueenDee: {
        const PPositionTable probe = queen_dee_pairs(n_max);
        const PPositionTable full = queen_dee_pairs(static_cast<std::size_t>(probe.b(n_max)));
        return check_eq1(full, [&](std::size_t i) { return full.a(i); }, n_max);
    }
    case Eq1Target::TwoQueenDee: {
        const PPositionTable probe = two_queen_dee_pairs(n_max);
        const PPositionTable full = two_queen_dee_pairs(static_cast<std::size_t>(probe.b(n_max)));
        return check_eq1(full, [&](std::size_t i) { return full.a(i); }, n_max);
    }
    case Eq1Target::QueenBee: {
        VileSequence seq;
        const PPositionTable table = queen_bee_pairs(n_max);
        return check_eq1(table, [&](std::size_t i) { return seq(i); }, n_max);
    }
    case Eq1Target::TwoOneQueen: {
        const PPositionTable probe = fraenkel_pairs(2, 2, n_max);
        const PPositionTable full = fraenkel_pairs(2, 2, static_cast<std::size_t>(probe.b(n_max)));
        return check_eq1(full, [&](std::size_t i) { return full.a(i); }, n_max);
    }
    }
    throw ParameterError("unknown eq1 target");
}

struct ResidualScan {
    std::vector<Residual> residuals;                          // n = 1..n_max
    std::vector<std::pair<std::int64_t, std::int64_t>> first; // value -> least n, by value
};

// Queen Bee residual scan via the closed form (b_n = 2 a_n over the vile
// numbers). Reports the plotted difference a_n + b_n - a_{b_n}, i.e.
// 3 vile(n) - vile(2 vile(n)), whose first value 5 lands at n = 310691; the
// check_eq1 orientation is its negative.
inline ResidualScan scan_queen_bee_residuals(std::size_t n_max) {
    if (n_max < 1) throw ParameterError("n_max must be >= 1");
    VileSequence seq;
    ResidualScan scan;
    scan.residuals.reserve(n_max);
    std::map<std::int64_t, std::int64_t> first;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::int64_t a = seq(n);
        const std::int64_t r = 3 * a - seq(static_cast<std::size_t>(2 * a));
        scan.residuals.push_back({std::int64_t(n), r});
        first.emplace(r, std::int64_t(n));
    }
    scan.first.assign(first.begin(), first.end());
    return scan;
}

// CSV per the fixed schema: header "n,r", one row per index, LF endings.
inline void write_residual_csv(std::ostream& os, std::span<const Residual> residuals) {
    os << "n,r\n";
    for (const Residual& res : residuals)
        os << res.n << ',' << res.r << '\n';
}

// The four Queen Dee / 2-Queen Dee identities: with Queen Dee pairs
// (alpha_n, beta_n) and 2-Queen-Dee pairs (a_n, b_n),
//   a_n = beta_n - alpha_n,  b_n = beta_n + alpha_n,
//   b_n - a_n = 2 alpha_n,   b_n + a_n = 2 beta_n.
inline bool check_lemma3(std::size_t count) {
    const PPositionTable two = two_queen_dee_pairs(count);
    const PPositionTable one = queen_dee_pairs(count);
    for (std::size_t n = 1; n <= count; ++n) {
        const std::int64_t a = two.a(n), b = two.b(n);
        const std::int64_t alpha = one.a(n), beta = one.b(n);
        if (a != beta - alpha) return false;
        if (b != beta + alpha) return false;
        if (b - a != 2 * alpha) return false;
        if (b + a != 2 * beta) return false;
    }
    return true;
}

// A triple (n,x,y), x < y, is good when (x,y) has no move to P_{n-1} in the
// 2-Queen-Dee game: both coordinates avoid A_{n-1} u B_{n-1} (the origin
// included) and y-x stays farther than 1 from every b_k - a_k and b_k + a_k,
// k < n. The three properties checked for each n <= count:
//   1. (n, a_n, b_n) is good;
//   2. no good (n,x,y) has x < a_n;
//   3. no good (n,a_n,y) has y < b_n.
// The (x,y) search is bounded by x <= a_n, y <= b_n.
inline bool check_good_triples(const PPositionTable& table, std::size_t count) {
    if (table.size() < count) throw ParameterError("table shorter than count");

    std::vector<bool> ab(1, true);   // coordinates of P_0..P_{n-1}; origin is 0
    std::vector<bool> near_ds(2, true); // within 1 of some b_k - a_k or a_k + b_k
    const auto mark = [](std::vector<bool>& bits, std::int64_t v) {
        if (v < 0) return;
        if (v >= std::int64_t(bits.size())) bits.resize(static_cast<std::size_t>(v) + 1, false);
        bits[static_cast<std::size_t>(v)] = true;
    };
    const auto marked = [](const std::vector<bool>& bits, std::int64_t v) {
        return v >= 0 && v < std::int64_t(bits.size()) && bits[static_cast<std::size_t>(v)];
    };
    const auto good = [&](std::int64_t x, std::int64_t y) {
        return x < y && !marked(ab, x) && !marked(ab, y) && !marked(near_ds, y - x);
    };

    for (std::size_t n = 1; n <= count; ++n) {
        const std::int64_t a = table.a(n), b = table.b(n);
        if (!good(a, b)) return false;
        for (std::int64_t x = 1; x < a; ++x)
            for (std::int64_t y = x + 1; y <= b; ++y)
                if (good(x, y)) return false;
        for (std::int64_t y = a + 1; y < b; ++y)
            if (good(a, y)) return false;
        mark(ab, a);
        mark(ab, b);
        for (std::int64_t v : {b - a, a + b})
            for (std::int64_t w : {v - 1, v, v + 1}) mark(near_ds, w);
    }
    return true;
}

inline bool check_good_triples(std::size_t count) {
    return check_good_triples(two_queen_dee_pairs(count), count);
}

enum class Relation {
    TwiceA,        // b = 2a
    APlusKN,       // b = a + k*n
    TwiceAPlusN,   // b = 2a + n
    APlusKNMinusJ, // b = a + k*n - j
};

inline bool check_relation(const PPositionTable& t, Relation relation, std::int64_t k,
                           std::int64_t j, std::size_t count) {
    if (t.size() < count) throw ParameterError("table shorter than count");
    for (std::size_t n = 1; n <= count; ++n) {
        const std::int64_t a = t.a(n), b = t.b(n), nn = std::int64_t(n);
        switch (relation) {
        case Relation::TwiceA:
            if (b != 2 * a) return false;
            break;
        case Relation::APlusKN:
            if (b != a + k * nn) return false;
            break;
        case Relation::TwiceAPlusN:
            if (b != 2 * a + nn) return false;
            break;
        case Relation::APlusKNMinusJ:
            if (b != a + k * nn - j) return false;
            break;
        }
    }
    return true;
}

// True when the first `count` pairs repeat no value and the union of their
// entries covers every integer in [1, a_count]; values between a_count and
// the larger b's are allowed to be pending later a's.
inline bool check_complementary(const PPositionTable& t, std::size_t count) {
    if (t.size() < count) throw ParameterError("table shorter than count");
    std::int64_t max_value = 0;
    for (std::size_t n = 1; n <= count; ++n)
        max_value = std::max({max_value, t.a(n), t.b(n)});
    std::vector<bool> seen(static_cast<std::size_t>(max_value) + 1, false);
    for (std::size_t n = 1; n <= count; ++n) {
        for (std::int64_t v : {t.a(n), t.b(n)}) {
            if (v < 1) return false;
            if (seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    for (std::int64_t v = 1; v <= t.a(count); ++v)
        if (!seen[static_cast<std::size_t>(v)]) return false;
    return true;
}

struct GrowthWitness {
    std::string x_decimal;
    Rational value;
};

// Constructive evidence that the Queen Bee residuals grow without bound:
// h(4^e1 + 4^e2 + ... ) with odd exponents e_i = 1 + (i-1)*gap approaches
// terms/3 as the gaps widen; each term contributes 1/3 up to interference
// that decays like 4^-gap.
inline GrowthWitness h_growth_witness(unsigned terms, unsigned gap = 10) {
    if (terms < 1) throw ParameterError("witness needs at least one term");
    if (gap < 2 || gap % 2 != 0) throw ParameterError("gap must be even and >= 2");
    uint128 x = 0;
    for (unsigned i = 0; i < terms; ++i) x += pow4_u128(1 + i * gap);
    return {to_string_u128(x), nearest_integer_distance_sum(x)};
}

} // namespace empress
