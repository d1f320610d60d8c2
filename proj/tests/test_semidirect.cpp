#include <doctest.h>

#include "gcpoly/semidirect.hpp"

using namespace gcp;

TEST_SUITE("semidirect") {

TEST_CASE("root system presets") {
    RootSystem a2 = root_system("A2");
    CHECK(a2.roots.size() == 6);
    CHECK(a2.simple.size() == 2);
    CHECK(a2.highest == QVec{1, 0, -1});
    CHECK(root_system("A1").roots.size() == 2);
    CHECK(root_system("B2").roots.size() == 8);
    CHECK_THROWS_AS(root_system("G2"), DomainError);
}

TEST_CASE("affine reflections") {
    QVec alpha = {1, -1};
    QVec v = {Rational(3), Rational(5, 2)};
    CHECK(affine_reflection(alpha, 0, affine_reflection(alpha, 0, v)) == v);
    CHECK(affine_reflection(alpha, 2, affine_reflection(alpha, 2, v)) == v);
    // s_{alpha,1} s_{alpha,0} translates by the coroot 2 alpha / <alpha,alpha>
    QVec got = affine_reflection(alpha, 1, affine_reflection(alpha, 0, v));
    CHECK(got == QVec{4, Rational(3, 2)});
}

TEST_CASE("semidirect product structure") {
    auto s2 = shared_group(symmetric_group(2));
    SemidirectGroup sd = make_semidirect(s2, 2, 2, {{0, 1, 1, 0}});
    CHECK(sd.group->order() == 8);
    // the action respects multiplication
    for (int h1 = 0; h1 < s2->order(); ++h1)
        for (unsigned v0 = 0; v0 < 4; ++v0) {
            std::vector<unsigned> v = {v0 & 1, (v0 >> 1) & 1};
            int a = sd.locate(h1, v);
            CHECK(a >= 0);
        }
    // a singular action matrix is rejected
    CHECK_THROWS_AS(make_semidirect(s2, 2, 1, {{0}}), DomainError);
}

TEST_CASE("generating set variants") {
    auto s2 = shared_group(symmetric_group(2));
    SemidirectGroup sd = make_semidirect(s2, 2, 2, {{0, 1, 1, 0}});
    auto full = theorem44_gen_set(sd, GenSetVariant::Full);
    auto no_id = theorem44_gen_set(sd, GenSetVariant::NoIdentity);
    auto no_inv = theorem44_gen_set(sd, GenSetVariant::NoInverses);
    CHECK(full.size() == 4);  // id, swap, n1, n2 (order-2 translations)
    CHECK(no_id.size() == 3);
    CHECK(no_inv.size() == 3);
    CHECK(full[0] == sd.group->identity());
}

TEST_CASE("affine quotients") {
    CHECK(affine_quotient("A1", 3).group->order() == 6);
    CHECK(affine_quotient("A2", 3).group->order() == 54);
    CHECK(affine_quotient("B2", 2).group->order() == 32);
}

TEST_CASE("cover set of products of simple generators") {
    CHECK(an_cover_set(1).size() == 2);
    CHECK(an_cover_set(2).size() == 4);
    CHECK(an_cover_set(3).size() == 8);
}

TEST_CASE("diagonal subgroup generators") {
    DiagonalGenerators d = gr_pn_generators(4, 2, 2);
    REQUIRE(d.ys.size() == 2);
    CHECK(d.ys[0].phases == std::vector<unsigned>{2, 0});
    CHECK(d.ys[1].phases == std::vector<unsigned>{3, 1});
    GroupElem y = identity_elem(4, 2);
    y.phases = {1, 1};
    auto e = d.decompose(y);
    GroupElem acc = identity_elem(4, 2);
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned k = 0; k < e[i]; ++k) acc = elem_mul(acc, d.ys[i]);
    CHECK(acc == y);
    GroupElem outside = identity_elem(4, 2);
    outside.phases = {1, 0};  // phase sum 1 is not divisible by p = 2
    CHECK_THROWS_AS(d.decompose(outside), DomainError);
}

TEST_CASE("quotient representation family") {
    auto s2 = shared_group(symmetric_group(2));
    SemidirectGroup sd = make_semidirect(s2, 2, 2, {{0, 1, 1, 0}});
    auto family = quotient_rep_family(sd);
    CHECK(family.size() >= 3);
    for (const Rep& rep : family) CHECK(check_representation(rep).pass);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            CHECK_FALSE(equivalent_p(family[i], family[j]));
}

}  // TEST_SUITE
