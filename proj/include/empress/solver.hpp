#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "empress/errors.hpp"
#include "empress/moves.hpp"
#include "empress/table.hpp"

// Exact retrograde P/N classification by increasing Manhattan level. Because
// every move strictly decreases x+y, classifying level L after all levels
// below it yields the exact answer for the unbounded game.
//
// Two interchangeable engines compute "does this position reach a discovered
// P-position":
//   slow  per-position move enumeration against the set of P bits;
//   fast  O(1)-ish line indices over the discovered P-positions (partner
//         value per row/column, min level per |b-a|, occupied sums a+b, and
//         a difference-indexed cone maximum for widened queens).
// Both visit positions in identical (level, x) order, so output is
// bit-identical; the test suite asserts it.

namespace empress {

struct SolverLimits {
    std::int64_t max_level = 1'000'000;
    std::int64_t max_memory_bytes = std::int64_t(1) << 30;
};

enum class Outcome : std::uint8_t { N = 0, P = 1 };

class ClassifiedRegion {
public:
    ClassifiedRegion(std::int64_t max_level, std::vector<std::uint8_t> status)
        : max_level_(max_level), status_(std::move(status)) {}

    std::int64_t max_level() const { return max_level_; }

    Outcome status(Position p) const {
        const std::int64_t level = p.manhattan();
        if (p.x < 0 || p.y < 0 || level > max_level_)
            throw std::out_of_range("position outside classified region");
        return static_cast<Outcome>(status_[static_cast<std::size_t>(level * (level + 1) / 2 + p.x)]);
    }

    std::vector<Position> p_positions() const {
        std::vector<Position> out;
        for (std::int64_t level = 0; level <= max_level_; ++level)
            for (std::int64_t x = 0; x <= level; ++x)
                if (status(Position{x, level - x}) == Outcome::P) out.push_back({x, level - x});
        return out;
    }

private:
    std::int64_t max_level_;
    std::vector<std::uint8_t> status_;
};

namespace detail {

// Bit-packed lower-triangular array over positions with x+y <= level.
class TriBits {
public:
    void grow(std::int64_t level, const SolverLimits& limits) {
        const std::int64_t cells = (level + 1) * (level + 2) / 2;
        if ((cells + 7) / 8 > limits.max_memory_bytes)
            throw CapacityError("retrograde scan exceeds memory limit at level " +
                                std::to_string(level));
        bits_.resize(static_cast<std::size_t>((cells + 63) / 64), 0);
    }
    bool test(Position p) const {
        const std::size_t i = index(p);
        return (bits_[i >> 6] >> (i & 63)) & 1;
    }
    void set(Position p) {
        const std::size_t i = index(p);
        bits_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }

private:
    static std::size_t index(Position p) {
        const std::int64_t level = p.manhattan();
        return static_cast<std::size_t>(level * (level + 1) / 2 + p.x);
    }
    std::vector<std::uint64_t> bits_;
};

inline void check_level(std::int64_t level, const SolverLimits& limits) {
    if (level > limits.max_level)
        throw CapacityError("retrograde scan exceeds level limit " +
                            std::to_string(limits.max_level));
}

// Per-position enumeration engine. Holds one bit per scanned position.
class SlowEngine {
public:
    SlowEngine(const QueenVariant& v, const SolverLimits& limits) : v_(v), limits_(limits) {}

    void begin_level(std::int64_t level) {
        check_level(level, limits_);
        pbits_.grow(level, limits_);
    }

    bool reaches_p(Position p) const {
        return for_each_move(v_, p, [&](Position q) { return pbits_.test(q); });
    }

    void record_p(Position p) {
        pbits_.set(p);
        pbits_.set(p.mirrored());
    }

private:
    QueenVariant v_;
    SolverLimits limits_;
    TriBits pbits_;
};

// Line-index engine. Holds only the discovered P-positions and their line
// occupancy; every reachability test is O(band width) array lookups.
class FastEngine {
public:
    FastEngine(const QueenVariant& v, const SolverLimits& limits)
        : v_(v), limits_(limits),
          enumerate_(v.kind == QueenVariant::Kind::WidenedQueen && v.m > 1) {
        if (enumerate_) fallback_.emplace(v, limits);
    }

    void begin_level(std::int64_t level) {
        check_level(level, limits_);
        if (enumerate_) fallback_->begin_level(level);
        if (level * 48 > limits_.max_memory_bytes)
            throw CapacityError("line indices exceed memory limit at level " +
                                std::to_string(level));
    }

    bool reaches_p(Position p) const {
        if (enumerate_) return fallback_->reaches_p(p);

        const std::int64_t x = p.x, y = p.y, level = p.manhattan(), d = y - x;
        const std::int64_t px = partner(x), py = partner(y);
        if (px >= 0 && px < y) return true; // column move
        if (py >= 0 && py < x) return true; // row move

        switch (v_.kind) {
        case QueenVariant::Kind::Standard:
            return band_hit(d, 0, -1, level);
        case QueenVariant::Kind::KQueen:
            return band_hit(d, v_.k - 1, -1, level);
        case QueenVariant::Kind::RestrictedStroll:
            return band_hit(d, v_.k - 1, v_.j, level);
        case QueenVariant::Kind::QueenBee: {
            if (band_hit(d, 0, -1, level)) return true;
            if (x < y) {
                const std::int64_t u = partner(d); // P-position in row d is (u, d)
                return u >= 1 && u <= 2 * x - 1;
            }
            if (y < x) {
                const std::int64_t u = partner(-d);
                return u >= 1 && u <= 2 * y - 1;
            }
            return false;
        }
        case QueenVariant::Kind::KQueenDee: {
            if (band_hit(d, v_.k - 1, -1, level)) return true;
            for (std::int64_t s = 0; s <= v_.k - 1 && s <= x; ++s)
                for (std::int64_t t = 0; s + t <= v_.k - 1 && t <= y; ++t) {
                    const std::int64_t rx = x - s, ry = y - t;
                    if (rx == ry || rx < 1 || ry < 1) continue;
                    const std::int64_t sum = rx < ry ? ry - rx : rx - ry;
                    if (sum < std::int64_t(sum_present_.size()) && sum_present_[sum]) return true;
                }
            return false;
        }
        case QueenVariant::Kind::WidenedQueen:
            return cone_hit(x, y) || cone_hit(y, x);
        }
        return false;
    }

    void record_p(Position p) {
        if (enumerate_) {
            fallback_->record_p(p);
            return;
        }
        const std::int64_t a = p.x, b = p.y, level = p.manhattan();
        grow(partner_, std::max(a, b), std::int64_t(-1));
        partner_[a] = b;
        partner_[b] = a;
        const std::int64_t diff = b >= a ? b - a : a - b;
        grow(diff_min_level_, diff, std::numeric_limits<std::int64_t>::max());
        diff_min_level_[diff] = std::min(diff_min_level_[diff], level);
        grow(sum_present_, level, std::uint8_t(0));
        sum_present_[level] = 1;
        if (v_.kind == QueenVariant::Kind::WidenedQueen) {
            cone_points_.push_back({b - a, b - v_.j * a});
            cone_points_.push_back({a - b, a - v_.j * b});
            std::sort(cone_points_.begin(), cone_points_.end());
            cone_prefix_max_.resize(cone_points_.size());
            std::int64_t best = std::numeric_limits<std::int64_t>::min();
            for (std::size_t i = 0; i < cone_points_.size(); ++i) {
                best = std::max(best, cone_points_[i].second);
                cone_prefix_max_[i] = best;
            }
        }
    }

private:
    template <class T>
    static void grow(std::vector<T>& v, std::int64_t key, T fill) {
        if (key >= std::int64_t(v.size())) v.resize(static_cast<std::size_t>(key) + 1, fill);
    }

    std::int64_t partner(std::int64_t value) const {
        if (value < 0 || value >= std::int64_t(partner_.size())) return -1;
        return partner_[value];
    }

    std::int64_t diff_level(std::int64_t diff) const {
        if (diff < 0 || diff >= std::int64_t(diff_min_level_.size()))
            return std::numeric_limits<std::int64_t>::max();
        return diff_min_level_[diff];
    }

    bool band_hit(std::int64_t d, std::int64_t width, std::int64_t banned_band,
                  std::int64_t level) const {
        for (std::int64_t e = -width; e <= width; ++e) {
            const std::int64_t dd = d + e;
            const std::int64_t ad = dd >= 0 ? dd : -dd;
            if (banned_band >= 0 && std::abs(d) > banned_band && ad <= banned_band) continue;
            if (diff_level(ad) < level) return true;
        }
        return false;
    }

    // Is some P-position (u,v) inside the widened cone of (x,y), i.e.
    // v-u <= y-x and v - j*u >= y - j*x?  (stroll m == 1 only)
    bool cone_hit(std::int64_t x, std::int64_t y) const {
        if (cone_points_.empty()) return false;
        const std::pair<std::int64_t, std::int64_t> key{y - x,
                                                        std::numeric_limits<std::int64_t>::max()};
        auto it = std::upper_bound(cone_points_.begin(), cone_points_.end(), key);
        if (it == cone_points_.begin()) return false;
        const std::size_t i = static_cast<std::size_t>(it - cone_points_.begin()) - 1;
        return cone_prefix_max_[i] >= y - v_.j * x;
    }

    QueenVariant v_;
    SolverLimits limits_;
    bool enumerate_ = false;
    std::optional<SlowEngine> fallback_;

    std::vector<std::int64_t> partner_;        // coordinate value -> its pair value
    std::vector<std::int64_t> diff_min_level_; // |b-a| -> least a+b among those P
    std::vector<std::uint8_t> sum_present_;    // a+b occupancy
    std::vector<std::pair<std::int64_t, std::int64_t>> cone_points_; // (v-u, v-j*u)
    std::vector<std::int64_t> cone_prefix_max_;
};

// Visits the x <= y half of each level in order; mirror symmetry of the move
// rules makes the other half redundant.
template <class Engine, class OnP>
void retrograde_scan(Engine& engine, std::int64_t first_level, OnP&& on_p) {
    for (std::int64_t level = first_level;; ++level) {
        engine.begin_level(level);
        for (std::int64_t x = 0; 2 * x <= level; ++x) {
            const Position p{x, level - x};
            const bool is_p = level == 0 || !engine.reaches_p(p);
            if (is_p) {
                engine.record_p(p);
                if (!on_p(p)) return;
            }
        }
    }
}

} // namespace detail

// Exact classification of every position with x+y <= max_level.
inline ClassifiedRegion classify_region(const QueenVariant& v, std::int64_t max_level,
                                        const SolverLimits& limits = {}) {
    v.validate();
    if (max_level < 0) throw ParameterError("max_level must be >= 0");
    detail::check_level(max_level, limits);
    const std::int64_t cells = (max_level + 1) * (max_level + 2) / 2;
    if (cells > limits.max_memory_bytes)
        throw CapacityError("classified region exceeds memory limit");

    std::vector<std::uint8_t> status(static_cast<std::size_t>(cells), 0);
    const auto at = [&status](Position p) -> std::uint8_t& {
        const std::int64_t level = p.manhattan();
        return status[static_cast<std::size_t>(level * (level + 1) / 2 + p.x)];
    };

    detail::SlowEngine engine(v, limits);
    for (std::int64_t level = 0; level <= max_level; ++level) {
        engine.begin_level(level);
        for (std::int64_t x = 0; 2 * x <= level; ++x) {
            const Position p{x, level - x};
            const bool is_p = level == 0 || !engine.reaches_p(p);
            if (is_p) {
                engine.record_p(p);
                at(p) = static_cast<std::uint8_t>(Outcome::P);
                at(p.mirrored()) = static_cast<std::uint8_t>(Outcome::P);
            }
        }
    }
    return ClassifiedRegion(max_level, std::move(status));
}

// The first `count` P-positions with a_n <= b_n, ordered by a_n; (0,0) is not
// reported. Both modes return bit-identical tables.
inline PPositionTable p_positions(const QueenVariant& v, std::size_t count, bool fast,
                                  const SolverLimits& limits = {}) {
    v.validate();
    if (count < 1) throw ParameterError("count must be >= 1");

    std::vector<PPair> rows;
    rows.reserve(count);
    const auto collect = [&rows, count](Position p) {
        if (p.manhattan() > 0) rows.push_back({p.x, p.y});
        return rows.size() < count;
    };

    if (fast) {
        detail::FastEngine engine(v, limits);
        detail::retrograde_scan(engine, 0, collect);
    } else {
        detail::SlowEngine engine(v, limits);
        detail::retrograde_scan(engine, 0, collect);
    }
    return PPositionTable(std::move(rows));
}

} // namespace empress
