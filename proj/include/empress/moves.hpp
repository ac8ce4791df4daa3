#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "empress/position.hpp"
#include "empress/variant.hpp"

// Move generation for every Queen variant. All moves strictly decrease the
// Manhattan distance x+y and stay in the nonnegative quadrant; the move sets
// are symmetric under reflection across the main diagonal.
//
// Geometry, with p = (x,y) and d = y-x:
//   row       (x',y) for 0 <= x' < x; column (x,y') for 0 <= y' < y
//   diagonal  (x-t, y-t) for 1 <= t <= min(x,y)
//   k-band    any (u,v) >= 0 with u+v < x+y and |(v-u) - d| <= k-1
//             (the k-Queen stroll; k = 1 is exactly the diagonal)
//   bounce    (Queen Bee, x < y) the diagonal run reaches the side at
//             (0, d); continuing perpendicularly gives (x', d) with
//             1 <= x' <= 2x-1, the range the distance rule allows
//   reflect   (Queen Dee) the diagonal run from (x,y), 1 <= x < y, reflects
//             at (0, d) onto the anti-diagonal u+v = d; the k-Queen Dee may
//             first stroll by (s,t), s+t <= k-1, and reflect from there
//   cone      (widened queen, scope j, stroll m) vectors (dx,dy) with
//             dx >= 1 and max(0, dx-(m-1)) <= dy <= j*dx + (m-1)
// plus the mirror image of each one-sided rule.

namespace empress {

namespace detail {

template <class F>
bool walk_rows_cols(Position p, F&& visit) {
    for (std::int64_t y = 0; y < p.y; ++y)
        if (visit(Position{p.x, y})) return true;
    for (std::int64_t x = 0; x < p.x; ++x)
        if (visit(Position{x, p.y})) return true;
    return false;
}

// All quadrant positions below p's Manhattan level whose difference v-u lies
// within `width` of p's. `banned_band` (restricted stroll) skips targets with
// |u-v| <= band when p itself is outside that band.
template <class F>
bool walk_band(Position p, std::int64_t width, std::int64_t banned_band, F&& visit) {
    const std::int64_t d = p.y - p.x;
    const std::int64_t level = p.manhattan();
    for (std::int64_t e = -width; e <= width; ++e) {
        const std::int64_t dd = d + e;
        if (banned_band >= 0 && std::abs(d) > banned_band && std::abs(dd) <= banned_band) continue;
        // positions (u, u+dd): u >= max(0, -dd), 2u + dd < level
        std::int64_t u = dd < 0 ? -dd : 0;
        for (; 2 * u + dd < level; ++u) {
            if (visit(Position{u, u + dd})) return true;
        }
    }
    return false;
}

template <class F>
bool walk_bounce(Position p, F&& visit) {
    if (p.x < p.y) {
        const std::int64_t row = p.y - p.x;
        for (std::int64_t x = 1; x <= 2 * p.x - 1; ++x)
            if (visit(Position{x, row})) return true;
    } else if (p.y < p.x) {
        const std::int64_t col = p.x - p.y;
        for (std::int64_t y = 1; y <= 2 * p.y - 1; ++y)
            if (visit(Position{col, y})) return true;
    }
    return false;
}

// Reflected continuations for the k-Queen Dee: stroll by (s,t), then run
// diagonally into the side and continue on the anti-diagonal u+v = |x'-y'|.
// A run that starts on the side (min = 0) or on the main diagonal does not
// reflect.
template <class F>
bool walk_reflections(Position p, std::int64_t k, F&& visit) {
    for (std::int64_t s = 0; s <= k - 1 && s <= p.x; ++s) {
        for (std::int64_t t = 0; s + t <= k - 1 && t <= p.y; ++t) {
            const std::int64_t px = p.x - s, py = p.y - t;
            if (px == py || px < 1 || py < 1) continue;
            const std::int64_t sum = std::abs(py - px);
            for (std::int64_t u = 0; u <= sum; ++u)
                if (visit(Position{u, sum - u})) return true;
        }
    }
    return false;
}

template <class F>
bool walk_cone(Position p, std::int64_t scope, std::int64_t stroll, F&& visit) {
    for (std::int64_t dx = 1; dx <= p.x; ++dx) {
        const std::int64_t lo = std::max<std::int64_t>(0, dx - (stroll - 1));
        const std::int64_t hi = std::min(p.y, scope * dx + (stroll - 1));
        for (std::int64_t dy = lo; dy <= hi; ++dy)
            if (visit(Position{p.x - dx, p.y - dy})) return true;
    }
    for (std::int64_t dy = 1; dy <= p.y; ++dy) {
        const std::int64_t lo = std::max<std::int64_t>(0, dy - (stroll - 1));
        const std::int64_t hi = std::min(p.x, scope * dy + (stroll - 1));
        for (std::int64_t dx = lo; dx <= hi; ++dx)
            if (visit(Position{p.x - dx, p.y - dy})) return true;
    }
    return false;
}

} // namespace detail

// Enumerates every legal target of `p` under `v`, possibly with duplicates
// and in no particular order. `visit` returns true to stop early; the return
// value says whether it did. The canonical, deduplicated set is legal_moves.
template <class F>
bool for_each_move(const QueenVariant& v, Position p, F&& visit) {
    v.validate();
    switch (v.kind) {
    case QueenVariant::Kind::Standard:
        return detail::walk_rows_cols(p, visit) || detail::walk_band(p, 0, -1, visit);
    case QueenVariant::Kind::KQueen:
        return detail::walk_rows_cols(p, visit) || detail::walk_band(p, v.k - 1, -1, visit);
    case QueenVariant::Kind::QueenBee:
        return detail::walk_rows_cols(p, visit) || detail::walk_band(p, 0, -1, visit) ||
               detail::walk_bounce(p, visit);
    case QueenVariant::Kind::KQueenDee:
        return detail::walk_rows_cols(p, visit) || detail::walk_band(p, v.k - 1, -1, visit) ||
               detail::walk_reflections(p, v.k, visit);
    case QueenVariant::Kind::WidenedQueen:
        return detail::walk_rows_cols(p, visit) || detail::walk_cone(p, v.j, v.m, visit);
    case QueenVariant::Kind::RestrictedStroll:
        return detail::walk_rows_cols(p, visit) || detail::walk_band(p, v.k - 1, v.j, visit);
    }
    return false;
}

// The exact set of legal moves, duplicate-free, in lexicographic (x,y) order.
inline std::vector<Position> legal_moves(const QueenVariant& v, Position p) {
    std::vector<Position> out;
    for_each_move(v, p, [&](Position q) {
        out.push_back(q);
        return false;
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Arithmetic membership test; agrees with legal_moves on all inputs.
inline bool is_legal_move(const QueenVariant& v, Position from, Position to) {
    v.validate();
    if (to.x < 0 || to.y < 0) return false;
    if (to.manhattan() >= from.manhattan()) return false;

    const bool line = to.y == from.y || to.x == from.x;
    const std::int64_t d = from.y - from.x;
    const auto in_band = [&](std::int64_t width) {
        return std::abs((to.y - to.x) - d) <= width;
    };

    switch (v.kind) {
    case QueenVariant::Kind::Standard:
        return line || in_band(0);
    case QueenVariant::Kind::KQueen:
        return line || in_band(v.k - 1);
    case QueenVariant::Kind::QueenBee: {
        if (line || in_band(0)) return true;
        if (from.x < from.y)
            return to.y == d && to.x >= 1 && to.x <= 2 * from.x - 1;
        if (from.y < from.x)
            return to.x == -d && to.y >= 1 && to.y <= 2 * from.y - 1;
        return false;
    }
    case QueenVariant::Kind::KQueenDee: {
        if (line || in_band(v.k - 1)) return true;
        const std::int64_t sum = to.x + to.y;
        for (std::int64_t s = 0; s <= v.k - 1 && s <= from.x; ++s)
            for (std::int64_t t = 0; s + t <= v.k - 1 && t <= from.y; ++t) {
                const std::int64_t px = from.x - s, py = from.y - t;
                if (px == py || px < 1 || py < 1) continue;
                if (std::abs(py - px) == sum) return true;
            }
        return false;
    }
    case QueenVariant::Kind::WidenedQueen: {
        if (line) return true;
        const auto cone = [&](std::int64_t dx, std::int64_t dy) {
            return dx >= 1 && dy >= std::max<std::int64_t>(0, dx - (v.m - 1)) &&
                   dy <= v.j * dx + (v.m - 1);
        };
        return cone(from.x - to.x, from.y - to.y) || cone(from.y - to.y, from.x - to.x);
    }
    case QueenVariant::Kind::RestrictedStroll: {
        if (line) return true;
        if (!in_band(v.k - 1)) return false;
        return !(std::abs(d) > v.j && std::abs(to.x - to.y) <= v.j);
    }
    }
    return false;
}

} // namespace empress
