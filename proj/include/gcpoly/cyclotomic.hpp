#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gcpoly/errors.hpp"

namespace gcp {

using Rational = mpq_class;

/// Monic integer polynomial, coefficients low to high.
using IntPoly = std::vector<mpz_class>;

/// r-th cyclotomic polynomial, degree totient(r). Throws DomainError for r = 0.
IntPoly cyclotomic_polynomial(unsigned r);

unsigned euler_totient(unsigned r);

/// Arithmetic context for Q(zeta_r) = Q[x]/Phi_r(x). One instance per r,
/// obtained through CycloField::get and shared by every CycNum of that order.
class CycloField {
public:
    static std::shared_ptr<const CycloField> get(unsigned r);

    unsigned r() const { return r_; }
    unsigned degree() const { return deg_; }
    const std::vector<Rational>& modulus() const { return phi_; }

private:
    explicit CycloField(unsigned r);
    unsigned r_;
    unsigned deg_;
    std::vector<Rational> phi_;  // Phi_r as rationals, monic
};

using FieldPtr = std::shared_ptr<const CycloField>;

/// Element of Q(zeta_r), coordinates over the power basis 1, z, ..., z^{deg-1}.
class CycNum {
public:
    CycNum() = default;  // zero in Q(zeta_1); usable only as a placeholder
    CycNum(FieldPtr f, std::vector<Rational> coeffs);

    static CycNum zero(const FieldPtr& f);
    static CycNum one(const FieldPtr& f);
    static CycNum from_rational(const FieldPtr& f, const Rational& q);
    /// zeta_r^k, any integer k.
    static CycNum zeta_pow(const FieldPtr& f, long k);

    unsigned r() const { return field_ ? field_->r() : 1; }
    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator-() const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator/(const CycNum& o) const;  // throws on zero divisor
    CycNum inverse() const;
    /// Complex conjugate (the Galois automorphism zeta -> zeta^{-1}).
    CycNum conj() const;
    /// Galois twist zeta -> zeta^j; requires gcd(j, r) = 1.
    CycNum galois(long j) const;

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;

    std::string to_string() const;
    std::string to_json() const;

private:
    FieldPtr field_;
    std::vector<Rational> c_;
    void check_same(const CycNum& o) const;
};

/// Ring homomorphism Q(zeta_r) -> F_p mapping zeta to omega.
/// Requires p ≡ 1 (mod r) and omega of multiplicative order exactly r.
std::uint64_t specialize_mod_p(const CycNum& a, std::uint64_t p, std::uint64_t omega);

// F_p helpers shared with the PIT machinery.
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
bool is_prime_u64(std::uint64_t n);
/// Smallest prime p ≡ 1 (mod r) with p > 2^31; deterministic per r.
std::uint64_t pit_prime(unsigned r);
/// Deterministic element of order exactly r in F_p (p ≡ 1 mod r).
std::uint64_t root_of_unity_mod_p(unsigned r, std::uint64_t p);

std::uint64_t rational_mod_p(const Rational& q, std::uint64_t p);

}  // namespace gcp
