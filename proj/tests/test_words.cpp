#include <doctest.h>

#include "gcpoly/words.hpp"

using namespace gcp;

TEST_SUITE("words") {

TEST_CASE("parsing") {
    Word w = parse_word("s1 t2^2 t1", 2);
    REQUIRE(w.size() == 4);
    CHECK(w[0] == Letter{'s', 1, 0});
    CHECK(w[1] == Letter{'t', 2, 0});
    CHECK(w[2] == Letter{'t', 2, 0});
    CHECK(w[3] == Letter{'t', 1, 0});
    CHECK(word_to_string(parse_word("s1 t2", 2)) == "s1 t2");
    CHECK(parse_word("", 2).empty());

    CHECK_THROWS_AS(parse_word("s2", 2), ParseError);   // s index < n
    CHECK_THROWS_AS(parse_word("t3", 2), ParseError);   // t index <= n
    CHECK_THROWS_AS(parse_word("x1", 2), ParseError);
    CHECK_THROWS_AS(parse_word("t1'", 2), ParseError);  // no second factor
    try {
        parse_word("s1 q2", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
    }
}

TEST_CASE("product alphabet parsing") {
    Word w = parse_word("s1 t1' t2", 2, 2);
    REQUIRE(w.size() == 3);
    CHECK(w[1] == Letter{'t', 1, 1});
    CHECK(w[2] == Letter{'t', 2, 0});
    CHECK(word_to_string(w) == "s1 t1' t2");
}

TEST_CASE("signature layout (a_1, b_1, ..., b_n)") {
    Word w = parse_word("s1 t1 t2 t2", 2);
    CHECK(signature(w, 2) == Signature{1, 1, 2});
    CHECK(ct_key(w, 2) == CtKey{4, 1, 1});
    Word v = parse_word("s1 s2 t3", 3);
    CHECK(signature(v, 3) == Signature{1, 0, 1, 0, 1});
}

TEST_CASE("ct order drops only the last t count") {
    Word t1 = parse_word("t1", 2);
    Word t2 = parse_word("t2", 2);
    CHECK(ct_key(t1, 2) == CtKey{1, 0, 1});
    CHECK(ct_key(t2, 2) == CtKey{1, 0, 0});
    CHECK(lex_compare(ct_key(t1, 2), ct_key(t2, 2)) == Ordering::GT);
    CHECK(lex_compare(ct_key(t2, 2), ct_key(t2, 2)) == Ordering::EQ);
}

TEST_CASE("evaluation") {
    GroupDescriptor d(2, 1, 2);
    CHECK(evaluate_word(parse_word("t1 t1", 2), d) == identity_elem(2, 2));
    CHECK(evaluate_word(parse_word("s1 t1", 2), d) ==
          evaluate_word(parse_word("t2 s1", 2), d));
}

TEST_CASE("word enumeration matches multinomial counts") {
    CHECK(multinomial(Signature{2, 1, 0}) == 3);
    CHECK(multinomial(Signature{0, 0, 0}) == 1);
    for (Signature alpha : {Signature{1, 1, 0}, Signature{2, 0, 1}, Signature{1, 1, 1}}) {
        auto words = enumerate_words(alpha, 2);
        CHECK(words.size() == multinomial(alpha));
        for (const Word& w : words) CHECK(signature(w, 2) == alpha);
        // all distinct
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j)
                CHECK(words[i] != words[j]);
    }
}

}  // TEST_SUITE
