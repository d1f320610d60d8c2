#include <doctest.h>

#include "gcpoly/reps.hpp"

using namespace gcp;

TEST_SUITE("reps") {

TEST_CASE("reflection representation of G(2,1,2)") {
    Rep refl = reflection_rep(2, 2);
    CHECK(refl.dim() == 2);
    CHECK(check_representation(refl).pass);
    ClassFunction chi = character(refl);
    CHECK(chi.exact[refl.group()->class_of(refl.group()->identity())] ==
          CycNum::from_rational(refl.field(), 2));
}

TEST_CASE("one dimensional characters") {
    for (unsigned r : {2u, 3u}) {
        auto chars = one_dim_characters(r, 2);
        CHECK(chars.size() == 2 * r);
        for (const Rep& c : chars) {
            CHECK(c.dim() == 1);
            CHECK(check_representation(c).pass);
        }
        // pairwise inequivalent
        for (std::size_t i = 0; i < chars.size(); ++i)
            for (std::size_t j = i + 1; j < chars.size(); ++j)
                CHECK_FALSE(equivalent_p(chars[i], chars[j]));
    }
}

TEST_CASE("non-homomorphic images fail the check") {
    auto g = shared_group(imprimitive_finite_group(GroupDescriptor(2, 1, 2)));
    FieldPtr f = CycloField::get(2);
    std::vector<ExactMat> images(3, ExactMat(1, 1, CycNum::from_rational(f, 2)));
    Rep bogus = Rep::exact(g, f, images);
    CHECK_FALSE(check_representation(bogus).pass);
}

TEST_CASE("equivalence is invariant under basis change") {
    Rep refl = reflection_rep(2, 2);
    FieldPtr f = refl.field();
    ExactMat x(2, 2, CycNum::zero(f));
    x(0, 0) = CycNum::from_rational(f, 1);
    x(0, 1) = CycNum::from_rational(f, 1);
    x(1, 1) = CycNum::from_rational(f, 1);
    Rep conj = conjugated(refl, x);
    CHECK(check_representation(conj).pass);
    CHECK(equivalent_p(refl, conj));
    auto chars = one_dim_characters(2, 2, refl.group());
    CHECK_FALSE(equivalent_p(refl, rep_combine(CombineOp::DirectSum, chars[0], &chars[2])));
}

TEST_CASE("combinations and twists") {
    Rep refl = reflection_rep(4, 2);
    auto chars = one_dim_characters(4, 2, refl.group());
    CHECK(rep_combine(CombineOp::Tensor, refl, &refl).dim() == 4);
    CHECK(rep_combine(CombineOp::DirectSum, refl, &chars[0]).dim() == 3);
    Rep dual = rep_combine(CombineOp::Dual, refl);
    CHECK(check_representation(dual).pass);
    Rep tw = galois_twist(refl, 3);
    CHECK(check_representation(tw).pass);
    CHECK_FALSE(equivalent_p(refl, tw));
    CHECK(equivalent_p(galois_twist(tw, 3), refl));
}

TEST_CASE("gaussian inverse") {
    FieldPtr f = CycloField::get(4);
    ExactMat m(2, 2, CycNum::zero(f));
    m(0, 0) = CycNum::one(f);
    m(0, 1) = CycNum::zeta_pow(f, 1);
    m(1, 0) = CycNum::from_rational(f, 2);
    m(1, 1) = CycNum::from_rational(f, 1);
    CHECK(m * gauss_inverse(m) == ExactMat::identity(2, CycNum::zero(f), CycNum::one(f)));
    ExactMat sing(2, 2, CycNum::one(f));
    CHECK_THROWS_AS(gauss_inverse(sing), DomainError);
}

TEST_CASE("regular representation decomposes deterministically") {
    auto g = shared_group(imprimitive_finite_group(GroupDescriptor(2, 1, 2)));
    Rep reg = regular_rep(g, CycloField::get(2));
    CHECK(reg.dim() == 8);
    CHECK(check_representation(reg).pass);
    auto dec = decompose_regular(g, 1);
    std::vector<unsigned> dims;
    long sum_sq = 0;
    for (const auto& k : dec) {
        dims.push_back(k.rep.dim());
        CHECK(k.multiplicity == k.rep.dim());
        sum_sq += static_cast<long>(k.rep.dim()) * k.rep.dim();
    }
    CHECK(dims == std::vector<unsigned>{1, 1, 1, 1, 2});
    CHECK(sum_sq == g->order());
    // same seed, same constituents
    auto dec2 = decompose_regular(g, 1);
    REQUIRE(dec2.size() == dec.size());
    for (std::size_t i = 0; i < dec.size(); ++i)
        CHECK(dec[i].rep.dim() == dec2[i].rep.dim());
}

}  // TEST_SUITE
