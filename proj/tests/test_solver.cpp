#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "empress/analysis.hpp"
#include "empress/sequences.hpp"
#include "empress/solver.hpp"

using namespace empress;

namespace {

const std::vector<QueenVariant> kCatalog = {
    QueenVariant::standard(),          QueenVariant::k_queen(2),
    QueenVariant::k_queen(3),          QueenVariant::queen_bee(),
    QueenVariant::k_queen_dee(1),      QueenVariant::k_queen_dee(2),
    QueenVariant::widened(2, 1),       QueenVariant::restricted_stroll(2, 1),
    QueenVariant::restricted_stroll(3, 1)};

} // namespace

TEST_CASE("classified regions match the worked examples") {
    const auto std_region = classify_region(QueenVariant::standard(), 3);
    CHECK(std_region.p_positions() == std::vector<Position>{{0, 0}, {1, 2}, {2, 1}});

    const auto bee_region = classify_region(QueenVariant::queen_bee(), 4);
    CHECK(bee_region.p_positions() == std::vector<Position>{{0, 0}, {1, 2}, {2, 1}});

    const auto dee2_region = classify_region(QueenVariant::k_queen_dee(2), 4);
    CHECK(dee2_region.p_positions() == std::vector<Position>{{0, 0}, {1, 3}, {3, 1}});

    CHECK(std_region.status(Position{0, 0}) == Outcome::P);
    CHECK(std_region.status(Position{1, 1}) == Outcome::N);
    CHECK_THROWS_AS(std_region.status(Position{4, 0}), std::out_of_range);
}

TEST_CASE("classification is sound and complete against the move rules") {
    for (const auto& v : kCatalog) {
        const auto region = classify_region(v, 36);
        for (std::int64_t level = 0; level <= 30; ++level) {
            for (std::int64_t x = 0; x <= level; ++x) {
                const Position p{x, level - x};
                bool reaches_p = false;
                for (const Position& q : legal_moves(v, p))
                    reaches_p = reaches_p || region.status(q) == Outcome::P;
                if (region.status(p) == Outcome::P)
                    CHECK_FALSE(reaches_p); // soundness: no P -> P move
                else
                    CHECK(reaches_p); // completeness: every N reaches a P
            }
        }
    }
}

TEST_CASE("p_positions reproduces the worked prefixes") {
    CHECK(p_positions(QueenVariant::queen_bee(), 5, false).rows() ==
          std::vector<PPair>{{1, 2}, {3, 6}, {4, 8}, {5, 10}, {7, 14}});
    CHECK(p_positions(QueenVariant::k_queen_dee(1), 6, false).rows() ==
          std::vector<PPair>{{1, 2}, {3, 5}, {4, 8}, {6, 11}, {7, 13}, {9, 16}});
    CHECK(p_positions(QueenVariant::widened(2, 1), 5, false).rows() ==
          std::vector<PPair>{{1, 3}, {2, 6}, {4, 11}, {5, 14}, {7, 19}});
    CHECK(p_positions(QueenVariant::k_queen(1), 3, false).rows() ==
          std::vector<PPair>{{1, 2}, {3, 5}, {4, 7}});
}

TEST_CASE("fast and slow scans return identical tables") {
    for (const auto& v : kCatalog) {
        const PPositionTable slow = p_positions(v, 80, false);
        const PPositionTable fast = p_positions(v, 80, true);
        CHECK(slow == fast);
    }
    // widened queens with a stroll margin use the enumeration fallback
    CHECK(p_positions(QueenVariant::widened(2, 2), 60, true) ==
          p_positions(QueenVariant::widened(2, 2), 60, false));
}

TEST_CASE("oracle tables match the closed forms") {
    CHECK(check_equivalence(p_positions(QueenVariant::queen_bee(), 120, true),
                            queen_bee_pairs(120), 120) == std::nullopt);
    CHECK(check_equivalence(p_positions(QueenVariant::k_queen_dee(2), 120, true),
                            two_queen_dee_pairs(120), 120) == std::nullopt);
    CHECK(check_equivalence(p_positions(QueenVariant::k_queen_dee(1), 120, true),
                            queen_dee_pairs(120), 120) == std::nullopt);
    for (std::int64_t k = 1; k <= 3; ++k)
        CHECK(check_equivalence(p_positions(QueenVariant::k_queen(k), 80, true),
                                holladay_pairs(k, 80), 80) == std::nullopt);
    CHECK(check_equivalence(p_positions(QueenVariant::widened(2, 1), 80, true),
                            fraenkel_pairs(2, 2, 80), 80) == std::nullopt);
}

TEST_CASE("widened queens match their morphism predictions") {
    // scope J, stroll M <-> the a -> a^(J+M-1) b, b -> a^J morphism
    CHECK(check_equivalence(p_positions(QueenVariant::widened(2, 2), 60, true),
                            fraenkel_pairs(3, 2, 60), 60) == std::nullopt);
    CHECK(check_equivalence(p_positions(QueenVariant::widened(3, 1), 60, true),
                            fraenkel_pairs(3, 3, 60), 60) == std::nullopt);
    CHECK(check_equivalence(p_positions(QueenVariant::widened(1, 3), 60, true),
                            holladay_pairs(3, 60), 60) == std::nullopt);
}

TEST_CASE("restricted stroll oracle under the literal entry ban") {
    // For (3,1) the oracle agrees with the morphic table; for (2,1) the ban
    // never bites and the game collapses to the plain 2-queen. Both are
    // regression-frozen observations about the literal move rule.
    CHECK(check_equivalence(p_positions(QueenVariant::restricted_stroll(3, 1), 100, true),
                            restricted_pairs(3, 1, 100), 100) == std::nullopt);
    CHECK(check_equivalence(p_positions(QueenVariant::restricted_stroll(2, 1), 100, true),
                            holladay_pairs(2, 100), 100) == std::nullopt);
}

TEST_CASE("streaming monotonicity: shorter scans are prefixes of longer ones") {
    for (const auto& v : kCatalog) {
        const PPositionTable longer = p_positions(v, 40, true);
        for (std::size_t count : {1u, 7u, 39u})
            CHECK(p_positions(v, count, true) == longer.prefix(count));
    }
}

TEST_CASE("each coordinate value appears at most once (row/column uniqueness)") {
    for (const auto& v : kCatalog) {
        const PPositionTable t = p_positions(v, 150, true);
        std::vector<bool> seen(static_cast<std::size_t>(t.b(150)) + 1, false);
        for (std::size_t n = 1; n <= t.size(); ++n)
            for (std::int64_t value : {t.a(n), t.b(n)}) {
                REQUIRE_FALSE(seen[static_cast<std::size_t>(value)]);
                seen[static_cast<std::size_t>(value)] = true;
            }
    }
}

TEST_CASE("capacity limits raise instead of truncating") {
    SolverLimits tight;
    tight.max_level = 10;
    CHECK_THROWS_AS(p_positions(QueenVariant::standard(), 50, false, tight), CapacityError);
    CHECK_THROWS_AS(p_positions(QueenVariant::standard(), 50, true, tight), CapacityError);
    CHECK_THROWS_AS(classify_region(QueenVariant::standard(), 50, tight), CapacityError);

    SolverLimits tiny_memory;
    tiny_memory.max_memory_bytes = 64;
    CHECK_THROWS_AS(p_positions(QueenVariant::standard(), 5000, false, tiny_memory),
                    CapacityError);
}

TEST_CASE("count must be positive") {
    CHECK_THROWS_AS(p_positions(QueenVariant::standard(), 0, false), ParameterError);
}
