#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "empress/words.hpp"

using namespace empress;

namespace {

const Coding kKappa{{{'a', "a"}, {'b', "ac"}, {'c', "a"}}};
const Coding kLambda{{{'a', "a"}, {'b', ""}, {'c', "c"}}};

} // namespace

TEST_CASE("tribonacci fixed point prefix") {
    CHECK(fixed_point(morphisms::tribonacci(), 'a', 26) == "abacabaabacababacabaabacab");
}

TEST_CASE("fibonacci and period doubling prefixes") {
    CHECK(fixed_point(morphisms::fibonacci(), 'a', 8) == "abaababa");
    CHECK(fixed_point(morphisms::period_doubling(), 'a', 8) == "abaaabab");
}

TEST_CASE("fixed point errors") {
    CHECK_THROWS_AS(fixed_point(morphisms::fibonacci(), 'b', 5), ParameterError);
    const Morphism not_prolongable{"ab", {{'a', "a"}, {'b', "ab"}}};
    CHECK_THROWS_AS(fixed_point(not_prolongable, 'a', 5), ParameterError);
    const Morphism erasing{"ab", {{'a', "ab"}, {'b', ""}}};
    CHECK_THROWS_AS(fixed_point(erasing, 'a', 5), ParameterError);
    const Morphism foreign{"ab", {{'a', "abz"}, {'b', "a"}}};
    CHECK_THROWS_AS(fixed_point(foreign, 'a', 5), ParameterError);
}

TEST_CASE("erasing letters from the tribonacci word") {
    const std::string t = fixed_point(morphisms::tribonacci(), 'a', 40);
    CHECK(erase_letters(t, "c").substr(0, 22) == "abaabaabaababaabaabaab");
    CHECK(erase_letters(t, "b").substr(0, 18) == "aacaaaacaaacaaaaca");
    CHECK(erase_letters(t, "") == t);
}

TEST_CASE("codings: kappa reproduces t_b, identity and erasing behave") {
    const std::string t = fixed_point(morphisms::tribonacci(), 'a', 2000);
    const std::string tb = erase_letters(t, "b");
    const std::string kt = apply_coding(t, kKappa);
    const std::size_t common = std::min(tb.size(), kt.size());
    CHECK(kt.substr(0, common) == tb.substr(0, common));

    const Coding identity{{{'a', "a"}, {'b', "b"}, {'c', "c"}}};
    CHECK(apply_coding(t, identity) == t);
    const Coding drop_ab{{{'a', ""}, {'b', ""}, {'c', "c"}}};
    CHECK(apply_coding("abc", drop_ab) == "c");
    CHECK_THROWS_AS(apply_coding("abq", kKappa), ParameterError);
}

TEST_CASE("lambda after tau equals kappa on prefixes") {
    const std::string t = fixed_point(morphisms::tribonacci(), 'a', 500);
    std::string tau_t;
    for (char c : t) tau_t += morphisms::tribonacci().rules.at(c);
    const std::string lhs = apply_coding(tau_t, kLambda);
    const std::string rhs = apply_coding(t, kKappa);
    const std::size_t common = std::min(lhs.size(), rhs.size());
    CHECK(lhs.substr(0, common) == rhs.substr(0, common));
}

TEST_CASE("occurrence_index") {
    const std::string t = fixed_point(morphisms::tribonacci(), 'a', 60);
    const std::string tc = erase_letters(t, "c");
    const std::string tb = erase_letters(t, "b");
    CHECK(occurrence_index(tc, 'b', 3) == 8);
    CHECK(occurrence_index(tb, 'c', 2) == 8);
    CHECK(occurrence_index("xyz", 'x', 1) == 1);
    CHECK_THROWS_AS(occurrence_index("aba", 'b', 2), InsufficientWordError);
}

TEST_CASE("word_table reads the paper tables off the tribonacci word") {
    const std::string t = fixed_point(morphisms::tribonacci(), 'a', 80);
    const std::string tb = erase_letters(t, "b");
    const std::string tc = erase_letters(t, "c");

    const PPositionTable from_tb = word_table(tb, 'a', 'c', 3);
    CHECK(from_tb.rows() == std::vector<PPair>{{1, 3}, {2, 8}, {4, 12}});

    const PPositionTable from_tc = word_table(tc, 'a', 'b', 3);
    CHECK(from_tc.rows() == std::vector<PPair>{{1, 2}, {3, 5}, {4, 8}});

    CHECK_THROWS_AS(word_table(tb, 'a', 'c', 500), InsufficientWordError);
}

TEST_CASE("t with a erased codes the same table as t with c erased") {
    const std::string t = fixed_point(morphisms::tribonacci(), 'a', 5000);
    const PPositionTable lhs = word_table(erase_letters(t, "a"), 'b', 'c', 50);
    const PPositionTable rhs = word_table(erase_letters(t, "c"), 'a', 'b', 50);
    CHECK(lhs == rhs);
}

TEST_CASE("the a->ab, b->aaa fixed point gives the non-morphic table") {
    const PPositionTable t = morphic_table(morphisms::fraenkel(1, 3), "", 'a', 'b', 5);
    CHECK(t.rows() == std::vector<PPair>{{1, 2}, {3, 7}, {4, 9}, {5, 11}, {6, 13}});
}

TEST_CASE("catalog lookups") {
    const Morphism h1 = catalog("holladay", {1});
    CHECK(h1.rules.at('a') == "ab");
    CHECK(h1.rules.at('b') == "a");

    const Morphism two_one = catalog("two-one");
    CHECK(two_one.rules.at('a') == "aab");
    CHECK(two_one.rules.at('b') == "aa");

    const Morphism four = catalog("fourbonacci");
    CHECK(four.alphabet == "abcd");
    CHECK(four.rules.at('c') == "ad");
    CHECK(four.rules.at('d') == "a");

    CHECK_THROWS_AS(catalog("pentanacci"), ParameterError);
    CHECK_THROWS_AS(catalog("holladay", {}), ParameterError);
    CHECK_THROWS_AS(catalog("restricted", {2, 2}), ParameterError);
}

TEST_CASE("prefix stability of fixed points") {
    std::mt19937 rng(20240901);
    const std::vector<Morphism> morphs = {morphisms::tribonacci(), morphisms::two_one(),
                                          morphisms::fourbonacci(), morphisms::restricted(3, 1)};
    for (const Morphism& m : morphs) {
        const std::string longest = fixed_point(m, 'a', 4000);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t len = 1 + rng() % 4000;
            CHECK(fixed_point(m, 'a', len) == longest.substr(0, len));
        }
    }
}

TEST_CASE("coding length law") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::string w;
        const std::size_t len = rng() % 200;
        for (std::size_t i = 0; i < len; ++i) w.push_back("abc"[rng() % 3]);
        const std::size_t img_a = rng() % 4, img_b = rng() % 4, img_c = rng() % 4;
        const Coding c{{{'a', std::string(img_a, 'x')},
                        {'b', std::string(img_b, 'y')},
                        {'c', std::string(img_c, 'z')}}};
        std::size_t expected = 0;
        for (char ch : w)
            expected += ch == 'a' ? img_a : ch == 'b' ? img_b : img_c;
        CHECK(apply_coding(w, c).size() == expected);
    }
}
