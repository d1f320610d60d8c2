#include <doctest.h>

#include <random>

#include "gcpoly/rewrite.hpp"

using namespace gcp;

namespace {
Word W(const std::string& text, unsigned n = 2) { return parse_word(text, n); }
}

TEST_SUITE("rewrite") {

TEST_CASE("single transformations") {
    Alphabet a{2, 3};
    CHECK(apply_transformation(W("s1 s1"), Rule::CancelS, 0, a).empty());
    CHECK(apply_transformation(W("t2 t2 t2"), Rule::CancelT, 0, a).empty());
    CHECK(apply_transformation(W("s1 t1"), Rule::PushT, 0, a) == W("t2 s1"));
    CHECK(apply_transformation(W("t1 s1"), Rule::PushT, 0, a) == W("s1 t2"));
    CHECK(apply_transformation(W("s1 t2 t2 s1"), Rule::Collapse, 0, a) == W("t1 t1"));
    CHECK(apply_transformation(W("t1 t2"), Rule::CommuteTT, 0, a) == W("t2 t1"));
    CHECK(apply_transformation(W("s1 t1"), Rule::Circular, 1, a) == W("t1 s1"));

    Alphabet a3{3, 2};
    CHECK(apply_transformation(W("s1 s2 s1", 3), Rule::Braid, 0, a3) == W("s2 s1 s2", 3));
    CHECK(apply_transformation(W("s1 t3", 3), Rule::CommuteST, 0, a3) == W("t3 s1", 3));

    CHECK_THROWS_AS(apply_transformation(W("s1 t1"), Rule::CancelS, 0, a),
                    RuleApplicationError);
    CHECK_THROWS_AS(apply_transformation(W("s1 t1"), Rule::CommuteST, 0, a),
                    RuleApplicationError);  // k = i is not a commuting pair
    CHECK_THROWS_AS(apply_transformation(W("t2 t2"), Rule::CancelT, 0, a),
                    RuleApplicationError);  // run shorter than r
}

TEST_CASE("cross-tag letters always commute") {
    Alphabet a{2, 2}, b{2, 3};
    Word w = parse_word("t1 t1'", 2, 2);
    Word v = apply_transformation(w, Rule::CommuteTT, 0, a, b);
    CHECK(v == parse_word("t1' t1", 2, 2));
    Word u = parse_word("s1 s1'", 2, 2);
    CHECK(apply_transformation(u, Rule::CommuteSS, 0, a, b) == parse_word("s1' s1", 2, 2));
}

TEST_CASE("echelon recognition") {
    Alphabet a{2, 3};
    CHECK(is_echelon(W("s1 t2 t2"), a).has_value());
    CHECK(is_echelon(W("t1 t1"), a).has_value());
    CHECK(is_echelon(W(""), a).has_value());
    CHECK_FALSE(is_echelon(W("t2 s1"), a).has_value());    // blocks out of order
    CHECK_FALSE(is_echelon(W("s1 t1"), a).has_value());    // s and t at the same index
    CHECK_FALSE(is_echelon(W("t1 t1 t1"), a).has_value()); // exponent = r
}

TEST_CASE("echelonize frozen examples") {
    GroupDescriptor d2(2, 1, 2), d3(3, 1, 2);
    CHECK(echelonize(W("s1 s1"), d2).echelon.flatten().empty());
    CHECK(echelonize(W("s1 t2 t2 s1"), d3).echelon.flatten() == W("t1 t1"));
    CHECK(echelonize(W("t2 t1"), d3).echelon.flatten() == W("t1 t2"));
    // budget is quadratic in the input length
    Word w = W("t1 s1 t2 s1 t1 t2");
    EchelonizeResult res = echelonize(w, d2);
    CHECK(res.trace.size() <= 50 * w.size() * w.size());
    for (const RewriteStep& st : res.trace)
        CHECK(apply_transformation(st.before, st.rule, st.position, Alphabet{2, 2}) ==
              st.after);
}

TEST_CASE("ct recovery") {
    GroupDescriptor d(3, 1, 2);
    EchelonWord e = ct_recover(CtKey{3, 1, 0}, d);
    CHECK(e.flatten() == W("s1 t2 t2"));
    CHECK(e.ct() == CtKey{3, 1, 0});
    CHECK(ct_recover(CtKey{0, 0, 0}, d).flatten().empty());
    // a_1 and b_1 cannot both be nonzero in an echelon word
    CHECK_THROWS_AS(ct_recover(CtKey{2, 1, 1}, d), DomainError);
    // implied exponent of t_2 would be r
    CHECK_THROWS_AS(ct_recover(CtKey{4, 1, 0}, d), DomainError);
}

TEST_CASE("separation and product echelonization") {
    Word w = parse_word("t1' s1 t1", 2, 2);
    CHECK(separation_form(w) == parse_word("s1 t1 t1'", 2, 2));
    GroupDescriptor d(2, 1, 2);
    ProductEchelonResult res = echelonize_product(parse_word("t2' s1 t1 s1' s1", 2, 2),
                                                  d, d);
    CHECK(res.first.tag == 0);
    CHECK(res.second.tag == 1);
    CHECK(product_ct_key(w, 2, 2) == CtKey{3, 1, 1, 0, 0, 1});
}

TEST_CASE("random words echelonize within budget and preserve conjugacy") {
    GroupDescriptor d(3, 1, 3);
    auto elems = enumerate_group(d);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        Word w;
        std::size_t len = rng() % 12;
        for (std::size_t k = 0; k < len; ++k) {
            if (rng() % 2)
                w.push_back({'s', 1 + static_cast<unsigned>(rng() % 2), 0});
            else
                w.push_back({'t', 1 + static_cast<unsigned>(rng() % 3), 0});
        }
        EchelonizeResult res = echelonize(w, d);
        Word flat = res.echelon.flatten();
        CHECK(res.trace.size() <= 50 * w.size() * w.size());
        CHECK(is_echelon(flat, Alphabet{3, 3}).has_value());
        CHECK(is_conjugate_brute(evaluate_word(w, d), evaluate_word(flat, d), elems));
        CHECK(lex_compare(ct_key(flat, 3), ct_key(w, 3)) != Ordering::GT);
    }
}

}  // TEST_SUITE
