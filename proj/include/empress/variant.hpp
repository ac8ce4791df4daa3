#pragma once

#include <cstdint>
#include <string>

#include "empress/errors.hpp"

namespace empress {

// A tagged move-rule specification. Parameters:
//   KQueen(k)            k >= 1; may drift up to k-1 off the diagonal per move.
//   KQueenDee(k)         k >= 1; KQueen whose diagonal runs may reflect once
//                        off a side onto the anti-diagonal (constant x+y).
//   WidenedQueen(j, m)   scope j >= 1, stroll m >= 1; diagonal cone
//                        dx <= dy <= j*dx widened by a stroll margin of m-1.
//   RestrictedStroll(k,j) k > j >= 0; KQueen(k) that may not enter the band
//                        |x-y| <= j except by a horizontal or vertical move.
struct QueenVariant {
    enum class Kind {
        Standard,
        KQueen,
        QueenBee,
        KQueenDee,
        WidenedQueen,
        RestrictedStroll,
    };

    Kind kind = Kind::Standard;
    std::int64_t k = 0; // KQueen / KQueenDee / RestrictedStroll
    std::int64_t j = 0; // WidenedQueen scope / RestrictedStroll band
    std::int64_t m = 0; // WidenedQueen stroll

    static QueenVariant standard() { return {Kind::Standard, 0, 0, 0}; }

    static QueenVariant k_queen(std::int64_t k) {
        QueenVariant v{Kind::KQueen, k, 0, 0};
        v.validate();
        return v;
    }

    static QueenVariant queen_bee() { return {Kind::QueenBee, 0, 0, 0}; }

    static QueenVariant k_queen_dee(std::int64_t k) {
        QueenVariant v{Kind::KQueenDee, k, 0, 0};
        v.validate();
        return v;
    }

    static QueenVariant widened(std::int64_t scope, std::int64_t stroll) {
        QueenVariant v{Kind::WidenedQueen, 0, scope, stroll};
        v.validate();
        return v;
    }

    static QueenVariant restricted_stroll(std::int64_t k, std::int64_t band) {
        QueenVariant v{Kind::RestrictedStroll, k, band, 0};
        v.validate();
        return v;
    }

    void validate() const {
        switch (kind) {
        case Kind::Standard:
        case Kind::QueenBee:
            return;
        case Kind::KQueen:
        case Kind::KQueenDee:
            if (k < 1) throw ParameterError("k-queen parameter must satisfy k >= 1");
            return;
        case Kind::WidenedQueen:
            if (j < 1) throw ParameterError("widened queen scope must satisfy j >= 1");
            if (m < 1) throw ParameterError("widened queen stroll must satisfy m >= 1");
            return;
        case Kind::RestrictedStroll:
            if (k < 1) throw ParameterError("restricted stroll requires k >= 1");
            if (j < 0 || j >= k) throw ParameterError("restricted stroll band requires k > j >= 0");
            return;
        }
        throw ParameterError("unknown variant kind");
    }

    std::string name() const {
        switch (kind) {
        case Kind::Standard: return "standard";
        case Kind::KQueen: return "k-queen:" + std::to_string(k);
        case Kind::QueenBee: return "queen-bee";
        case Kind::KQueenDee:
            if (k == 1) return "queen-dee";
            return std::to_string(k) + "-queen-dee";
        case Kind::WidenedQueen:
            return "widened:" + std::to_string(j) + "," + std::to_string(m);
        case Kind::RestrictedStroll:
            return "restricted:" + std::to_string(k) + "," + std::to_string(j);
        }
        return "?";
    }

    bool operator==(const QueenVariant&) const = default;
};

} // namespace empress
