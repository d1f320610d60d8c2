#include <doctest.h>

#include "gcpoly/cyclotomic.hpp"

using namespace gcp;

TEST_SUITE("cyclotomic") {

TEST_CASE("cyclotomic polynomials, low to high coefficients") {
    CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
    CHECK(cyclotomic_polynomial(2) == IntPoly{1, 1});
    CHECK(cyclotomic_polynomial(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
    CHECK_THROWS_AS(cyclotomic_polynomial(0), DomainError);
}

TEST_CASE("totient matches polynomial degree") {
    for (unsigned r = 1; r <= 24; ++r)
        CHECK(cyclotomic_polynomial(r).size() == euler_totient(r) + 1);
    CHECK(euler_totient(12) == 4);
}

TEST_CASE("power-basis arithmetic in Q(zeta_r)") {
    FieldPtr f3 = CycloField::get(3);
    CHECK(CycNum::zeta_pow(f3, 1) + CycNum::zeta_pow(f3, 2) ==
          CycNum::from_rational(f3, -1));

    FieldPtr f4 = CycloField::get(4);
    CycNum i = CycNum::zeta_pow(f4, 1);
    CHECK(i * i == CycNum::from_rational(f4, -1));
    CHECK(i.conj() == CycNum::zeta_pow(f4, -1));

    FieldPtr f5 = CycloField::get(5);
    CycNum a = CycNum::one(f5) + CycNum::zeta_pow(f5, 1);
    CHECK(a * a.inverse() == CycNum::one(f5));
    CHECK_THROWS_AS(CycNum::zero(f5).inverse(), DomainError);
}

TEST_CASE("galois automorphisms") {
    FieldPtr f5 = CycloField::get(5);
    CycNum z = CycNum::zeta_pow(f5, 1);
    CHECK(z.galois(2) == CycNum::zeta_pow(f5, 2));
    CHECK(z.galois(2).galois(3) == z);  // 2 * 3 = 6 = 1 mod 5
    FieldPtr f4 = CycloField::get(4);
    CHECK_THROWS_AS(CycNum::zeta_pow(f4, 1).galois(2), DomainError);
}

TEST_CASE("pit primes") {
    CHECK(pit_prime(1) == 2147483659ULL);
    CHECK(pit_prime(2) == 2147483659ULL);
    for (unsigned r : {3u, 4u, 5u, 12u}) {
        std::uint64_t p = pit_prime(r);
        CHECK(is_prime_u64(p));
        CHECK(p > (1ULL << 31));
        CHECK((p - 1) % r == 0);
    }
}

TEST_CASE("roots of unity mod p have exact order") {
    for (unsigned r : {2u, 3u, 5u, 8u}) {
        std::uint64_t p = pit_prime(r);
        std::uint64_t w = root_of_unity_mod_p(r, p);
        CHECK(mod_pow(w, r, p) == 1);
        for (unsigned d = 1; d < r; ++d)
            if (r % d == 0) CHECK(mod_pow(w, d, p) != 1);
    }
}

TEST_CASE("specialization is a ring homomorphism") {
    FieldPtr f5 = CycloField::get(5);
    std::uint64_t p = pit_prime(5);
    std::uint64_t w = root_of_unity_mod_p(5, p);
    CycNum a = CycNum::from_rational(f5, Rational(1, 2)) + CycNum::zeta_pow(f5, 1);
    CycNum b = CycNum::from_rational(f5, 3) - CycNum::zeta_pow(f5, 3);
    CHECK(specialize_mod_p(a * b, p, w) ==
          mod_mul(specialize_mod_p(a, p, w), specialize_mod_p(b, p, w), p));
    CHECK(specialize_mod_p(a + b, p, w) ==
          (specialize_mod_p(a, p, w) + specialize_mod_p(b, p, w)) % p);
    CHECK(mod_mul(rational_mod_p(Rational(1, 2), p), 2, p) == 1);
}

}  // TEST_SUITE
