#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "empress/sequences.hpp"

using namespace empress;

namespace {

// Table 2 of the 2-Queen-Dee game (A140102 / A140103).
const std::vector<PPair> kTwoQueenDee15 = {{1, 3},   {2, 8},   {4, 12},  {5, 17},  {6, 20},
                                           {7, 25},  {9, 29},  {10, 34}, {11, 39}, {13, 43},
                                           {14, 48}, {15, 51}, {16, 56}, {18, 60}, {19, 65}};

// Table 3 of the Queen Dee game (A140100 / A140101).
const std::vector<PPair> kQueenDee15 = {{1, 2},   {3, 5},   {4, 8},   {6, 11},  {7, 13},
                                        {9, 16},  {10, 19}, {12, 22}, {14, 25}, {15, 28},
                                        {17, 31}, {18, 33}, {20, 36}, {21, 39}, {23, 42}};

} // namespace

TEST_CASE("mex and mex2") {
    CHECK(mex(std::vector<std::int64_t>{}) == 0);
    CHECK(mex(std::vector<std::int64_t>{0, 1, 2, 4}) == 3);
    CHECK(mex(std::vector<std::int64_t>{1, 2, 3}) == 0);

    CHECK(mex2(std::vector<std::int64_t>{2, 4, 6, 10, 14}) == 8);
    CHECK(mex2(std::vector<std::int64_t>{}) == 2);
    CHECK(mex2(std::vector<std::int64_t>{0}) == 2);
    CHECK(mex2(std::vector<std::int64_t>{2, 4}) == 6);
    CHECK_THROWS_AS(mex2(std::vector<std::int64_t>{2, 3}), ParameterError);
}

TEST_CASE("vile and dopey numbers") {
    CHECK(is_vile(12)); // 1100
    CHECK_FALSE(is_vile(8)); // 1000
    CHECK(vile(6) == 9);
    CHECK(dopey(6) == 18);
    CHECK_THROWS_AS(is_vile(0), ParameterError);

    // A003159: vile numbers are closed under the doubling complement: the
    // first few values match the published sequence.
    const std::vector<std::int64_t> expected = {1, 3, 4, 5, 7, 9, 11, 12, 13, 15, 16, 17};
    VileSequence seq;
    for (std::size_t n = 1; n <= expected.size(); ++n) CHECK(seq(n) == expected[n - 1]);
}

TEST_CASE("queen bee pairs (Table 1)") {
    CHECK(queen_bee_pair(1) == PPair{1, 2});
    CHECK(queen_bee_pair(8) == PPair{12, 24});
    CHECK(queen_bee_pair(15) == PPair{21, 42});
    const PPositionTable t = queen_bee_pairs(15);
    CHECK(t.a(11) == 16);
    CHECK(t.b(11) == 32);
    for (std::size_t n = 1; n <= 15; ++n) CHECK(t.b(n) == 2 * t.a(n));
}

TEST_CASE("two queen dee pairs via the mex construction (Table 2)") {
    const PPositionTable t = two_queen_dee_pairs(15);
    CHECK(t.rows() == kTwoQueenDee15);
}

TEST_CASE("queen dee pairs via the transfer identities (Table 3)") {
    const PPositionTable t = queen_dee_pairs(15);
    CHECK(t.rows() == kQueenDee15);
}

TEST_CASE("mex state invariant holds after every step") {
    // After n steps: A u B covers 0..max(A); D u S holds even numbers only
    // and covers the even numbers up to max(D).
    MexState state;
    std::int64_t max_a = 0, max_d = 0, max_value = 0;
    std::set<std::int64_t> set_a = {0}, set_b = {0}, ab = {0}, ds = {0};
    for (int step = 0; step < 400; ++step) {
        const PPair pair = state.step();
        max_a = pair.a;
        max_d = std::max(max_d, pair.b - pair.a);
        max_value = std::max(max_value, pair.b + pair.a);
        set_a.insert(pair.a);
        set_b.insert(pair.b);
        ab.insert(pair.a);
        ab.insert(pair.b);
        ds.insert(pair.b - pair.a);
        ds.insert(pair.b + pair.a);

        // A u B covers 0..max(A), and beyond 0 a value sits in A xor B.
        for (std::int64_t v = 1; v <= max_a; ++v) {
            REQUIRE(ab.count(v) == 1);
            REQUIRE(!(set_a.count(v) && set_b.count(v)));
        }
        for (std::int64_t v : ds) REQUIRE(v % 2 == 0);
        for (std::int64_t v = 0; v <= max_d; v += 2) REQUIRE(state.in_ds(v));
        if (step % 50 != 0) continue;
        // the state's membership bitmaps match the reconstruction exactly
        for (std::int64_t v = 0; v <= max_value; ++v) {
            REQUIRE(state.in_ab(v) == (ab.count(v) > 0));
            REQUIRE(state.in_ds(v) == (ds.count(v) > 0));
        }
    }
}

TEST_CASE("beatty floors") {
    CHECK(beatty_psi(1, 2) == 3);
    CHECK(beatty_psi(1, 1) == 1);
    CHECK(beatty_psi(2, 3) == 4);
    CHECK(holladay_pair(1, 2) == PPair{3, 5});
    CHECK(holladay_pair(2, 3) == PPair{4, 10});

    // Against the morphic route: floor(n psi_k) pairs equal the holladay
    // morphism table.
    for (std::int64_t k = 1; k <= 3; ++k) {
        const PPositionTable beatty = holladay_pairs(k, 3000);
        const PPositionTable words = morphic_table(morphisms::holladay(k), "", 'a', 'b', 3000);
        CHECK(beatty == words);
    }
}

TEST_CASE("beatty sequence is complementary to its partner") {
    // floor(n phi) and floor(n phi) + n partition the positive integers.
    const PPositionTable t = holladay_pairs(1, 2000);
    std::set<std::int64_t> seen;
    for (std::size_t n = 1; n <= t.size(); ++n) {
        CHECK(seen.insert(t.a(n)).second);
        CHECK(seen.insert(t.b(n)).second);
    }
    for (std::int64_t v = 1; v <= t.a(2000); ++v) CHECK(seen.count(v) == 1);
}

TEST_CASE("f counts the queen bee index") {
    CHECK(f_queen_bee(1) == 1);
    CHECK(f_queen_bee(9) == 6);
    CHECK(f_queen_bee(2) == 1);
    VileSequence seq;
    for (std::size_t n = 1; n <= 10000; ++n) CHECK(f_queen_bee(seq(n)) == std::int64_t(n));
}

TEST_CASE("h distance sums") {
    CHECK(nearest_integer_distance_sum(std::int64_t(0)) == Rational(0));
    CHECK(nearest_integer_distance_sum(std::int64_t(4)) == Rational(1, 3));
    CHECK(nearest_integer_distance_sum(std::int64_t(1)) == Rational(1, 3));
    for (unsigned e = 0; e <= 10; ++e)
        CHECK(nearest_integer_distance_sum(pow4_u128(e)) == Rational(1, 3));
    CHECK_THROWS_AS(nearest_integer_distance_sum(std::int64_t(-1)), ParameterError);
}

TEST_CASE("h agrees with a straight partial-sum bound") {
    // Independent route: sum the termwise distances far past the closed-form
    // switch point and compare within the exact geometric remainder.
    for (std::int64_t x = 1; x <= 200; ++x) {
        Rational partial(0);
        unsigned j = 0;
        for (; j <= 20; ++j) {
            const uint128 p = pow4_u128(j);
            const uint128 r = uint128(x) % p;
            const uint128 dist = r <= p - r ? r : p - r;
            partial = partial + Rational(int128(dist), int128(p));
        }
        const Rational tail_bound(4 * x, int128(3) * int128(pow4_u128(j)));
        const Rational diff = (nearest_integer_distance_sum(x) - partial).abs();
        CHECK(diff <= tail_bound);
    }
}

TEST_CASE("h is invariant under multiplication by 4") {
    for (std::int64_t x = 0; x <= 500; ++x)
        CHECK(nearest_integer_distance_sum(4 * x) == nearest_integer_distance_sum(x));
}

TEST_CASE("rational arithmetic is exact and reduced") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(2, 5));
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK_THROWS_AS(Rational(1, 0), ParameterError);
}

TEST_CASE("fraenkel pairs (Table 4) and difference steps") {
    const PPositionTable t = fraenkel_pairs(2, 2, 2000);
    CHECK(t.a(1) == 1);
    CHECK(t.b(1) == 3);
    CHECK(t.a(2) == 2);
    CHECK(t.b(2) == 6);
    CHECK(t.a(3) == 4);
    CHECK(t.b(3) == 11);
    for (std::size_t n = 1; n < 2000; ++n) {
        const std::int64_t da = t.a(n + 1) - t.a(n);
        const std::int64_t db = t.b(n + 1) - t.b(n);
        const bool step13 = da == 1 && db == 3;
        const bool step25 = da == 2 && db == 5;
        CHECK((step13 || step25));
    }
}

TEST_CASE("restricted pairs satisfy b = a + k n - j") {
    const PPositionTable r21 = restricted_pairs(2, 1, 1);
    CHECK(r21.b(1) == r21.a(1) + 2 - 1);
    for (auto [k, j] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 1}, {3, 1}, {3, 2}, {5, 2}}) {
        const PPositionTable t = restricted_pairs(k, j, 1500);
        for (std::size_t n = 1; n <= t.size(); ++n)
            CHECK(t.b(n) == t.a(n) + k * std::int64_t(n) - j);
    }
    // j = 0 degenerates to the k-queen relation b = a + k n
    CHECK(restricted_pairs(2, 0, 500) == holladay_pairs(2, 500));
}
