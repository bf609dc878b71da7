#include <doctest.h>

#include "pdseq/oracle.hpp"
#include "pdseq/word.hpp"
#include "support.hpp"

using namespace pdseq;
using testing::word;

TEST_CASE("alphabet bounds") {
    CHECK_THROWS_AS(Alphabet(1), DomainError);
    CHECK_THROWS_AS(Alphabet(257), DomainError);
    CHECK(Alphabet(256).size() == 256);
    CHECK_THROWS_AS(Word(Alphabet(3), {0, 3}), DomainError);
}

TEST_CASE("exchange map") {
    CHECK(exchange(0, Alphabet(3)) == 1);
    CHECK(exchange(2, Alphabet(3)) == 0);
    CHECK(exchange(3, Alphabet(5)) == 4);
    CHECK_THROWS_AS(exchange(3, Alphabet(3)), DomainError);
}

TEST_CASE("substitution examples") {
    CHECK(substitute(word(3, "0")) == word(3, "01"));
    CHECK(substitute(Word(Alphabet(4))).empty());
    CHECK(substitute(word(3, "10101")) == word(3, "0201020102"));
    CHECK(mirror_substitute(word(3, "0")) == word(3, "10"));
    CHECK(mirror_substitute(word(4, "010201")) == word(4, "102010301020"));
    CHECK(mirror_substitute(Word(Alphabet(2))).empty());
}

TEST_CASE("iterate examples") {
    CHECK(iterate(Alphabet(3), 4) == word(3, "0102010001020101"));
    for (unsigned k = 2; k <= 9; ++k) CHECK(iterate(Alphabet(k), 0) == word(k, "0"));
    CHECK(iterate(Alphabet(4), 4) == word(4, "0102010301020100"));
    CHECK(iterate_letter(Alphabet(3), 2, 2) == word(3, "0101"));
    CHECK_THROWS_AS(iterate(Alphabet(3), 10, 512), CapExceeded);
}

TEST_CASE("letter_at examples") {
    for (unsigned k = 2; k <= 8; ++k) CHECK(letter_at(Alphabet(k), 0) == 0);
    CHECK(letter_at(Alphabet(3), 3) == 2);
    CHECK(letter_at(Alphabet(2), 7) == 1);
    // Index 2^40 - 1 has 40 trailing ones.
    CHECK(letter_at(Alphabet(7), (std::uint64_t{1} << 40) - 1) == 40 % 7);
}

TEST_CASE("letter_at agrees with the naive prefix at random indices") {
    for (int trial = 0; trial < 6; ++trial) {
        const unsigned k = static_cast<unsigned>(testing::uniform(2, 12));
        Word prefix = oracle::naive_prefix(Alphabet(k), std::size_t{1} << 18);
        for (int j = 0; j < 2000; ++j) {
            const std::size_t i = testing::uniform(0, prefix.size() - 1);
            REQUIRE(letter_at(Alphabet(k), i) == prefix[i]);
        }
    }
}

TEST_CASE("string utilities") {
    CHECK(mirror(word(3, "012")) == word(3, "210"));
    CHECK(is_palindrome(word(3, "0102010")));
    CHECK(is_palindrome(Word(Alphabet(3))));
    CHECK_FALSE(is_palindrome(word(3, "0102")));

    auto occ = occurrences(word(2, "00"), word(2, "010001000"));
    REQUIRE(occ.size() == 4);
    CHECK(occ[0].start == 3);
    CHECK(occ[1].start == 4);
    CHECK(occ[2].start == 7);
    CHECK(occ[3].start == 8);
    CHECK(occurrences(word(2, "0100"), word(2, "010")).empty());
    CHECK(occurrences(Word(Alphabet(2)), word(2, "010")).empty());

    CHECK(lcp(word(3, "01020"), word(3, "0102101")) == word(3, "0102"));
    CHECK(lcp_length(word(3, "0").letters(), Word(Alphabet(3)).letters()) == 0);

    Word u = word(3, "0102010");
    CHECK(slice(u, 2, 4) == word(3, "102"));
    CHECK(slice(u, 1, 7) == u);
    CHECK(slice(u, 3, 2).empty());
    CHECK(slice(u, 8, 7).empty());
    CHECK_THROWS_AS(slice(u, 0, 2), DomainError);
    CHECK_THROWS_AS(slice(u, 3, 8), DomainError);
    CHECK_THROWS_AS(slice(u, 5, 3), DomainError);

    CHECK(strip_leading(u, 0) == word(3, "102010"));
    CHECK_THROWS_AS(strip_leading(u, 1), DomainError);
    CHECK(drop_suffix(u, 3) == word(3, "0102"));
    CHECK(repeat(word(2, "01"), 3) == word(2, "010101"));
    CHECK(starts_with(u, word(3, "010")));
    CHECK(ends_with(u, word(3, "2010")));
}

TEST_CASE("text form") {
    CHECK(Word(Alphabet(3)).to_text() == "-");
    CHECK(Word::from_text("-", Alphabet(3)).empty());
    CHECK(Word(Alphabet(12), {0, 11, 10, 1}).to_text() == "0,11,10,1");
    CHECK(Word::from_text("0,11,10,1", Alphabet(12)) == Word(Alphabet(12), {0, 11, 10, 1}));
    CHECK_THROWS_AS(Word::from_text("013", Alphabet(3)), DomainError);
    CHECK_THROWS_AS(Word::from_text("0a", Alphabet(3)), DomainError);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned k = static_cast<unsigned>(testing::uniform(2, 20));
        Word w = testing::random_word(k, 30);
        CHECK(Word::from_text(w.to_text(), Alphabet(k)) == w);
    }
}

TEST_CASE("morphism properties on random words") {
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned k = static_cast<unsigned>(testing::uniform(2, 9));
        Word u = testing::random_word(k, 40);
        Word v = testing::random_word(k, 40);
        CHECK(substitute(u + v) == substitute(u) + substitute(v));
        CHECK(substitute(u).size() == 2 * u.size());
        CHECK(mirror(substitute(u)) == mirror_substitute(mirror(u)));
    }
}

TEST_CASE("occurrences agree with the quadratic scan") {
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned k = static_cast<unsigned>(testing::uniform(2, 4));
        Word text = oracle::naive_prefix(Alphabet(k), testing::uniform(1, 300));
        Word pattern = testing::uniform(0, 1) ? testing::random_factor(text, 1, 8) : testing::random_word(k, 6);
        std::vector<std::size_t> starts;
        for (const auto& o : occurrences(pattern, text)) starts.push_back(o.start);
        CHECK(starts == oracle::naive_occurrences(pattern, text));
        auto first = find_first(pattern.letters(), text.letters());
        CHECK(first.has_value() == !starts.empty());
        if (first) CHECK(first->start == starts.front());
    }
}

TEST_CASE("sequence_prefix and the length cap") {
    CHECK(sequence_prefix(Alphabet(3), 73).size() == 73);
    CHECK(sequence_prefix(Alphabet(5), 0).empty());
    CHECK_THROWS_AS(sequence_prefix(Alphabet(3), 1000, 999), CapExceeded);
}
