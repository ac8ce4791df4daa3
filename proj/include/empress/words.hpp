#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "empress/errors.hpp"
#include "empress/table.hpp"

// Substitution morphisms, fixed-point prefixes, codings, and extraction of
// P-position tables from letter occurrence indices. Words are plain strings
// of letters; positions are 1-based (the location of the first letter is 1).

namespace empress {

// Letter -> nonempty word. Erasing images are only allowed in Coding.
struct Morphism {
    std::string alphabet;                // ordered
    std::map<char, std::string> rules;

    void validate() const {
        if (alphabet.empty()) throw ParameterError("morphism alphabet is empty");
        for (char c : alphabet) {
            auto it = rules.find(c);
            if (it == rules.end())
                throw ParameterError(std::string("morphism has no rule for '") + c + "'");
            if (it->second.empty())
                throw ParameterError(std::string("morphism rule for '") + c +
                                     "' erases; erasing maps belong in a Coding");
            for (char img : it->second)
                if (alphabet.find(img) == std::string::npos)
                    throw ParameterError(std::string("rule image letter '") + img +
                                         "' is outside the alphabet");
        }
    }

    bool prolongable_at(char seed) const {
        auto it = rules.find(seed);
        return it != rules.end() && it->second.size() >= 2 && it->second.front() == seed;
    }
};

// Letter -> word, applied once; the empty word erases the letter.
struct Coding {
    std::map<char, std::string> images;
};

// First `length` letters of the unique fixed point of `m` starting at `seed`.
// Streaming work-queue expansion: the prefix built so far is itself the queue
// of letters whose images extend it, so long prefixes cost linear time.
inline std::string fixed_point(const Morphism& m, char seed, std::size_t length) {
    m.validate();
    if (length < 1) throw ParameterError("fixed point length must be >= 1");
    if (!m.prolongable_at(seed))
        throw ParameterError(std::string("morphism is not prolongable at '") + seed +
                             "': rule must start with the seed and have length >= 2");

    std::array<const std::string*, 256> rule{};
    for (const auto& [c, img] : m.rules) rule[static_cast<unsigned char>(c)] = &img;

    std::string word = m.rules.at(seed);
    std::size_t next = 1;
    while (word.size() < length) {
        const std::string& img = *rule[static_cast<unsigned char>(word[next++])];
        word.append(img);
    }
    word.resize(length);
    return word;
}

inline std::string erase_letters(std::string_view w, std::string_view letters) {
    std::string out;
    out.reserve(w.size());
    for (char c : w)
        if (letters.find(c) == std::string_view::npos) out.push_back(c);
    return out;
}

inline std::string apply_coding(std::string_view w, const Coding& c) {
    std::string out;
    out.reserve(w.size());
    for (char letter : w) {
        auto it = c.images.find(letter);
        if (it == c.images.end())
            throw ParameterError(std::string("letter '") + letter + "' outside coding domain");
        out.append(it->second);
    }
    return out;
}

// 1-based position of the n-th occurrence of `letter` in `w`.
inline std::size_t occurrence_index(std::string_view w, char letter, std::size_t n) {
    if (n < 1) throw ParameterError("occurrence index must be >= 1");
    std::size_t seen = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == letter && ++seen == n) return i + 1;
    }
    throw InsufficientWordError(std::string("word holds only ") + std::to_string(seen) +
                                " occurrences of '" + letter + "', needed " + std::to_string(n));
}

// Pairs (position of n-th la, position of n-th lb) for n = 1..count.
inline PPositionTable word_table(std::string_view w, char la, char lb, std::size_t count) {
    if (count < 1) throw ParameterError("count must be >= 1");
    std::vector<std::int64_t> pos_a, pos_b;
    pos_a.reserve(count);
    pos_b.reserve(count);
    for (std::size_t i = 0; i < w.size() && (pos_a.size() < count || pos_b.size() < count); ++i) {
        if (w[i] == la && pos_a.size() < count) pos_a.push_back(std::int64_t(i) + 1);
        if (w[i] == lb && pos_b.size() < count) pos_b.push_back(std::int64_t(i) + 1);
    }
    if (pos_a.size() < count || pos_b.size() < count)
        throw InsufficientWordError("word prefix too short for " + std::to_string(count) +
                                    " occurrences of both letters");
    std::vector<PPair> rows(count);
    for (std::size_t i = 0; i < count; ++i) rows[i] = {pos_a[i], pos_b[i]};
    return PPositionTable(std::move(rows));
}

namespace morphisms {

inline Morphism fibonacci() { return {"ab", {{'a', "ab"}, {'b', "a"}}}; }

inline Morphism holladay(std::int64_t k) {
    if (k < 1) throw ParameterError("holladay morphism requires k >= 1");
    return {"ab", {{'a', std::string(std::size_t(k), 'a') + "b"}, {'b', "a"}}};
}

inline Morphism period_doubling() { return {"ab", {{'a', "ab"}, {'b', "aa"}}}; }

inline Morphism tribonacci() { return {"abc", {{'a', "ab"}, {'b', "ac"}, {'c', "a"}}}; }

// a -> a^k b, b -> a^j
inline Morphism fraenkel(std::int64_t k, std::int64_t j) {
    if (k < 1 || j < 1) throw ParameterError("fraenkel morphism requires k >= 1 and j >= 1");
    return {"ab",
            {{'a', std::string(std::size_t(k), 'a') + "b"}, {'b', std::string(std::size_t(j), 'a')}}};
}

// a -> a^(k-j) b a^j, b -> a
inline Morphism restricted(std::int64_t k, std::int64_t j) {
    if (k < 1 || j < 0 || j >= k) throw ParameterError("restricted morphism requires k > j >= 0");
    return {"ab",
            {{'a', std::string(std::size_t(k - j), 'a') + "b" + std::string(std::size_t(j), 'a')},
             {'b', "a"}}};
}

inline Morphism two_one() { return {"ab", {{'a', "aab"}, {'b', "aa"}}}; }

inline Morphism fourbonacci() {
    return {"abcd", {{'a', "ab"}, {'b', "ac"}, {'c', "ad"}, {'d', "a"}}};
}

} // namespace morphisms

// Catalog lookup by name. Parameterized entries take their parameters in
// `params` (holladay: k; fraenkel: k,j; restricted: k,j).
inline Morphism catalog(const std::string& name, const std::vector<std::int64_t>& params = {}) {
    const auto want = [&](std::size_t n) {
        if (params.size() != n)
            throw ParameterError("catalog morphism '" + name + "' takes " + std::to_string(n) +
                                 " parameter(s)");
    };
    std::string key = name;
    for (char& c : key)
        if (c == '-') c = '_';
    if (key == "fibonacci") { want(0); return morphisms::fibonacci(); }
    if (key == "holladay") { want(1); return morphisms::holladay(params[0]); }
    if (key == "period_doubling") { want(0); return morphisms::period_doubling(); }
    if (key == "tribonacci") { want(0); return morphisms::tribonacci(); }
    if (key == "fraenkel") { want(2); return morphisms::fraenkel(params[0], params[1]); }
    if (key == "restricted") { want(2); return morphisms::restricted(params[0], params[1]); }
    if (key == "two_one") { want(0); return morphisms::two_one(); }
    if (key == "fourbonacci") { want(0); return morphisms::fourbonacci(); }
    throw ParameterError("unknown catalog morphism '" + name + "'");
}

// Table extraction with the prefix length handled internally: generate the
// fixed point of `m`, optionally erase letters, and read off `count` pairs,
// doubling the prefix until it suffices.
inline PPositionTable morphic_table(const Morphism& m, std::string_view erase, char la, char lb,
                                    std::size_t count) {
    std::size_t length = std::max<std::size_t>(64, 8 * count);
    for (;;) {
        const std::string word = fixed_point(m, m.alphabet.front(), length);
        const std::string reduced = erase.empty() ? word : erase_letters(word, erase);
        try {
            return word_table(reduced, la, lb, count);
        } catch (const InsufficientWordError&) {
            if (length > (std::size_t(1) << 40))
                throw CapacityError("morphic table prefix exceeds supported length");
            length *= 2;
        }
    }
}

} // namespace empress
