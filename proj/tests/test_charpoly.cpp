#include <doctest.h>

#include "gcpoly/charpoly.hpp"

using namespace gcp;

TEST_SUITE("charpoly") {

TEST_CASE("trivial pencil determinant is the sum of variables") {
    auto chars = one_dim_characters(2, 2);
    MultiPoly det = det_exact(make_pencil(chars[0]));
    FieldPtr f = chars[0].field();
    MultiPoly expect = MultiPoly::variable(4, 0, f);
    for (unsigned k = 1; k < 4; ++k) expect = expect + MultiPoly::variable(4, k, f);
    CHECK(det == expect);
}

TEST_CASE("regular pencil of Z/2 is x0^2 - x1^2") {
    auto g = shared_group(cyclic_group(2));
    FieldPtr f = CycloField::get(1);
    Rep reg = regular_rep(g, f);
    MultiPoly det = det_exact(make_pencil(reg));
    MultiPoly x0 = MultiPoly::variable(2, 0, f), x1 = MultiPoly::variable(2, 1, f);
    CHECK(det == x0 * x0 - x1 * x1);
}

TEST_CASE("elimination agrees with cofactor expansion") {
    Rep refl = reflection_rep(2, 2);
    Pencil p = make_pencil(refl);
    CHECK(det_exact(p) == det_cofactor(pencil_matrix(p)));
    Rep refl3 = reflection_rep(3, 3);
    Pencil p3 = make_pencil(refl3);
    CHECK(det_exact(p3) == det_cofactor(pencil_matrix(p3)));
}

TEST_CASE("dimension cap directs large pencils to the randomized route") {
    auto g = shared_group(imprimitive_finite_group(GroupDescriptor(3, 1, 2)));
    Rep reg = regular_rep(g, CycloField::get(3));
    CHECK_THROWS_AS(det_exact(make_pencil(reg)), ResourceError);
}

TEST_CASE("randomized identity testing") {
    Rep refl = reflection_rep(2, 2);
    FieldPtr f = refl.field();
    ExactMat x(2, 2, CycNum::zero(f));
    x(0, 0) = CycNum::from_rational(f, 2);
    x(0, 1) = CycNum::from_rational(f, 1);
    x(1, 0) = CycNum::from_rational(f, 1);
    x(1, 1) = CycNum::from_rational(f, 1);
    Rep conj = conjugated(refl, x);
    auto gens = refl.group()->generator_elements();

    PitVerdict same = charpoly_equal(refl, conj, gens, 12, 1);
    CHECK(same.equal);
    CHECK(same.bound < 0x1p-60);

    auto chars = one_dim_characters(2, 2, refl.group());
    PitVerdict diff = charpoly_equal(chars[0], chars[2], gens, 12, 1);
    CHECK_FALSE(diff.equal);
    CHECK_FALSE(diff.witness.empty());

    // genuinely complex character values
    Rep refl4 = reflection_rep(4, 2);
    auto c4 = one_dim_characters(4, 2, refl4.group());
    PitVerdict cross = charpoly_equal(c4[0], c4[1], refl4.group()->generator_elements(),
                                      12, 1);
    CHECK_FALSE(cross.equal);
}

TEST_CASE("signature sums of the reflection representation") {
    Rep refl = reflection_rep(2, 2);
    FieldPtr f = refl.field();
    auto sum = [&](Signature alpha, SigSumMethod m) {
        return signature_sum(refl, alpha, 2, m);
    };
    for (SigSumMethod m : {SigSumMethod::Brute, SigSumMethod::Coefficient}) {
        CHECK(sum({0, 0, 0}, m) == CycNum::from_rational(f, 2));  // trace of identity
        CHECK(sum({1, 0, 0}, m) == CycNum::zero(f));
        CHECK(sum({0, 1, 0}, m) == CycNum::zero(f));
        CHECK(sum({2, 0, 0}, m) == CycNum::from_rational(f, 2));
        // t1 s1 and s1 t1 both have trace 0
        CHECK(sum({1, 1, 0}, m) == CycNum::zero(f));
    }
    CHECK_THROWS_AS(signature_sum(refl, {9, 0, 0}, 2, SigSumMethod::Brute, 6),
                    ResourceError);
}

TEST_CASE("frobenius factorization for S3") {
    auto g = shared_group(symmetric_group(3));
    FrobeniusReport rep = frobenius_check(g, 1);
    CHECK(rep.pass);
    CHECK(rep.max_rel_err < 1e-6);
    CHECK(rep.points == 20);
}

}  // TEST_SUITE
