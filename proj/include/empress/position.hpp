#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace empress {

// A board square in the nonnegative quadrant. Rows and columns are numbered
// 0,1,2,... and the Manhattan distance x+y to the corner (0,0) is the
// ordering key used everywhere: every legal move strictly decreases it.
struct Position {
    std::int64_t x = 0;
    std::int64_t y = 0;

    constexpr std::int64_t manhattan() const { return x + y; }

    // Reflection across the main diagonal.
    constexpr Position mirrored() const { return {y, x}; }

    constexpr bool operator==(const Position&) const = default;
    // Lexicographic (x, y); the canonical move-set order.
    constexpr auto operator<=>(const Position&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Position& p) {
    return os << '(' << p.x << ',' << p.y << ')';
}

} // namespace empress
