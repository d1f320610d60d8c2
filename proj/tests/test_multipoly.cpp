#include <doctest.h>

#include "gcpoly/matrix.hpp"
#include "gcpoly/multipoly.hpp"

using namespace gcp;

namespace {
FieldPtr F() { return CycloField::get(4); }
MultiPoly X(unsigned k) { return MultiPoly::variable(2, k, F()); }
}

TEST_SUITE("multipoly") {

TEST_CASE("ring arithmetic and canonical form") {
    MultiPoly x = X(0), y = X(1);
    MultiPoly sq = (x + y) * (x + y);
    CHECK(sq.term_count() == 3);
    CHECK(sq.coefficient({1, 1}) == CycNum::from_rational(F(), 2));
    CHECK((sq - sq).is_zero());
    CHECK(sq.total_degree() == 2);
    CHECK(sq.is_homogeneous(2));
    CHECK_FALSE((sq + x).is_homogeneous(2));
    // leading term under grlex is the last map entry, x_0 beats x_1
    CHECK(std::prev(sq.terms().end())->first == Exponents{2, 0});
}

TEST_CASE("exact division") {
    MultiPoly x = X(0), y = X(1);
    CHECK(MultiPoly::divide_exact(x * x - y * y, x + y) == x - y);
    CHECK_THROWS_AS(MultiPoly::divide_exact(x * x + y, x + y), DomainError);
}

TEST_CASE("truncation drops exceeding terms") {
    MultiPoly x = X(0), y = X(1);
    MultiPoly p = x * x + x * y + y;
    MultiPoly t = p.truncated({1, 1});
    CHECK(t == x * y + y);
}

TEST_CASE("evaluation agrees with modular evaluation") {
    MultiPoly x = X(0), y = X(1);
    MultiPoly p = x * x * y.scaled(CycNum::from_rational(F(), 3)) + y +
                  MultiPoly::constant(2, CycNum::zeta_pow(F(), 1));
    std::uint64_t q = pit_prime(4);
    std::uint64_t w = root_of_unity_mod_p(4, q);
    std::vector<std::uint64_t> pt = {5, 7};
    std::vector<CycNum> pte = {CycNum::from_rational(F(), 5),
                               CycNum::from_rational(F(), 7)};
    CHECK(p.evaluate_mod_p(pt, q, w) == specialize_mod_p(p.evaluate(pte), q, w));
}

TEST_CASE("matrix operations") {
    FieldPtr f = F();
    CycNum z = CycNum::zero(f), o = CycNum::one(f);
    using EM = Mat<CycNum>;
    EM a = EM::identity(2, z, o);
    EM m(2, 2, z);
    m(0, 1) = o;
    m(1, 0) = o;
    CHECK(m * m == a);
    CHECK(m.trace() == z);
    CHECK(EM::tensor(m, a).rows() == 4);
    CHECK(EM::direct_sum(m, a, z).rows() == 4);
    CHECK(m.transpose() == m);
}

}  // TEST_SUITE
