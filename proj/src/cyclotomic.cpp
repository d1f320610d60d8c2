#include "gcpoly/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gcp {

unsigned euler_totient(unsigned r) {
    unsigned result = r;
    unsigned n = r;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, remainder known to be zero.
IntPoly div_exact(const IntPoly& num, const IntPoly& den) {
    IntPoly rem = num;
    IntPoly quot(num.size() - den.size() + 1, mpz_class(0));
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        mpz_class q = rem[i + den.size() - 1] / den.back();
        quot[i] = q;
        for (std::size_t j = 0; j < den.size(); ++j)
            rem[i + j] -= q * den[j];
    }
    return quot;
}

}  // namespace

IntPoly cyclotomic_polynomial(unsigned r) {
    if (r == 0) throw DomainError("cyclotomic_polynomial: r must be positive");
    if (r == 1) return {mpz_class(-1), mpz_class(1)};
    // Phi_r = (x^r - 1) / prod_{d | r, d < r} Phi_d
    IntPoly num(r + 1, mpz_class(0));
    num[0] = -1;
    num[r] = 1;
    IntPoly den = {mpz_class(1)};
    for (unsigned d = 1; d < r; ++d) {
        if (r % d != 0) continue;
        IntPoly phi_d = cyclotomic_polynomial(d);
        IntPoly next(den.size() + phi_d.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < den.size(); ++i)
            for (std::size_t j = 0; j < phi_d.size(); ++j)
                next[i + j] += den[i] * phi_d[j];
        den = std::move(next);
    }
    return div_exact(num, den);
}

CycloField::CycloField(unsigned r) : r_(r) {
    IntPoly phi = cyclotomic_polynomial(r);
    deg_ = static_cast<unsigned>(phi.size() - 1);
    phi_.reserve(phi.size());
    for (const auto& c : phi) phi_.emplace_back(c);
}

std::shared_ptr<const CycloField> CycloField::get(unsigned r) {
    if (r == 0) throw DomainError("CycloField: r must be positive");
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<const CycloField>(new CycloField(r));
    cache.emplace(r, f);
    return f;
}

CycNum::CycNum(FieldPtr f, std::vector<Rational> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
    if (c_.size() != field_->degree())
        throw DomainError("CycNum: coefficient vector has wrong length");
    for (auto& q : c_) q.canonicalize();
}

CycNum CycNum::zero(const FieldPtr& f) {
    return CycNum(f, std::vector<Rational>(f->degree(), Rational(0)));
}

CycNum CycNum::one(const FieldPtr& f) {
    std::vector<Rational> c(f->degree(), Rational(0));
    c[0] = 1;
    return CycNum(f, std::move(c));
}

CycNum CycNum::from_rational(const FieldPtr& f, const Rational& q) {
    std::vector<Rational> c(f->degree(), Rational(0));
    c[0] = q;
    return CycNum(f, std::move(c));
}

namespace {

// Reduce a polynomial (low to high) modulo the field's monic modulus.
std::vector<Rational> reduce_mod(const CycloField& f, std::vector<Rational> p) {
    const auto& phi = f.modulus();
    const std::size_t deg = f.degree();
    while (p.size() > deg) {
        Rational lead = p.back();
        std::size_t shift = p.size() - 1 - deg;
        if (lead != 0) {
            for (std::size_t j = 0; j < deg; ++j)
                p[shift + j] -= lead * phi[j];
        }
        p.pop_back();
    }
    p.resize(deg, Rational(0));
    return p;
}

}  // namespace

CycNum CycNum::zeta_pow(const FieldPtr& f, long k) {
    long r = static_cast<long>(f->r());
    long kk = ((k % r) + r) % r;
    std::vector<Rational> p(static_cast<std::size_t>(kk) + 1, Rational(0));
    p.back() = 1;
    return CycNum(f, reduce_mod(*f, std::move(p)));
}

bool CycNum::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool CycNum::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

bool CycNum::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

void CycNum::check_same(const CycNum& o) const {
    if (!field_ || !o.field_ || field_->r() != o.field_->r())
        throw DomainError("CycNum: mixed root-of-unity orders");
}

CycNum CycNum::operator+(const CycNum& o) const {
    check_same(o);
    std::vector<Rational> c(c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return CycNum(field_, std::move(c));
}

CycNum CycNum::operator-(const CycNum& o) const {
    check_same(o);
    std::vector<Rational> c(c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return CycNum(field_, std::move(c));
}

CycNum CycNum::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& q : c) q = -q;
    return CycNum(field_, std::move(c));
}

CycNum CycNum::operator*(const CycNum& o) const {
    check_same(o);
    std::vector<Rational> p(2 * c_.size(), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            p[i + j] += c_[i] * o.c_[j];
        }
    }
    return CycNum(field_, reduce_mod(*field_, std::move(p)));
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw DomainError("CycNum: division by zero");
    // Extended Euclid in Q[x] for gcd(a, Phi_r) = 1.
    using Poly = std::vector<Rational>;
    auto deg = [](const Poly& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (p[static_cast<std::size_t>(i)] != 0) return i;
        return -1;
    };
    Poly r0 = field_->modulus();
    Poly r1 = c_;
    Poly s0(1, Rational(0)), s1(1, Rational(1));  // Bezout coeffs against a
    while (deg(r1) > 0) {
        int d0 = deg(r0), d1 = deg(r1);
        Poly q(static_cast<std::size_t>(d0 - d1) + 1, Rational(0));
        Poly rem = r0;
        for (int i = d0 - d1; i >= 0; --i) {
            Rational f = rem[static_cast<std::size_t>(i + d1)] / r1[static_cast<std::size_t>(d1)];
            q[static_cast<std::size_t>(i)] = f;
            if (f != 0)
                for (int j = 0; j <= d1; ++j)
                    rem[static_cast<std::size_t>(i + j)] -= f * r1[static_cast<std::size_t>(j)];
        }
        Poly s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j)
                s2[i + j] -= q[i] * s1[j];
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    int d = deg(r1);
    if (d < 0) throw DomainError("CycNum: not invertible");  // cannot happen in a field
    Rational lead = r1[static_cast<std::size_t>(d)];
    for (auto& q : s1) q /= lead;
    return CycNum(field_, reduce_mod(*field_, std::move(s1)));
}

CycNum CycNum::operator/(const CycNum& o) const {
    check_same(o);
    return *this * o.inverse();
}

CycNum CycNum::galois(long j) const {
    long r = static_cast<long>(field_->r());
    long jj = ((j % r) + r) % r;
    if (std::gcd(jj, r) != 1) throw DomainError("CycNum::galois: j not coprime to r");
    CycNum acc = CycNum::zero(field_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        CycNum term = zeta_pow(field_, static_cast<long>(k) * jj);
        acc = acc + CycNum::from_rational(field_, c_[k]) * term;
    }
    return acc;
}

CycNum CycNum::conj() const { return field_->r() == 1 ? *this : galois(-1); }

bool CycNum::operator==(const CycNum& o) const {
    check_same(o);
    return c_ == o.c_;
}

std::complex<double> CycNum::to_complex() const {
    const double two_pi = 6.283185307179586476925286766559;
    double theta = two_pi / static_cast<double>(field_->r());
    std::complex<double> zeta(std::cos(theta), std::sin(theta));
    std::complex<double> acc(0.0, 0.0), pow(1.0, 0.0);
    for (const auto& q : c_) {
        acc += q.get_d() * pow;
        pow *= zeta;
    }
    return acc;
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        os << c_[k].get_str();
        if (k > 0) os << "*z^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string CycNum::to_json() const {
    std::ostringstream os;
    os << "{\"r\":" << r() << ",\"coeffs\":[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << "[\"" << c_[i].get_num().get_str() << "\",\""
           << c_[i].get_den().get_str() << "\"]";
    }
    os << "]}";
    return os.str();
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = mod_mul(acc, b, p);
        b = mod_mul(b, b, p);
        e >>= 1;
    }
    return acc;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    return mod_pow(a % p, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic Miller-Rabin base set for 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t pit_prime(unsigned r) {
    std::uint64_t base = (1ull << 31) + 1;
    std::uint64_t p = base + ((r - base % r + 1) % r);  // first candidate ≡ 1 mod r above 2^31
    while (p % r != 1 % r || !is_prime_u64(p)) p += (r > 1 ? r : 1);
    return p;
}

std::uint64_t root_of_unity_mod_p(unsigned r, std::uint64_t p) {
    if ((p - 1) % r != 0) throw ConfigError("root_of_unity_mod_p: p is not 1 mod r");
    if (r == 1) return 1;
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t rr = r;
    for (std::uint64_t q = 2; q * q <= rr; ++q)
        if (rr % q == 0) {
            prime_factors.push_back(q);
            while (rr % q == 0) rr /= q;
        }
    if (rr > 1) prime_factors.push_back(rr);
    for (std::uint64_t h = 2;; ++h) {
        std::uint64_t w = mod_pow(h, (p - 1) / r, p);
        bool exact = true;
        for (auto q : prime_factors)
            if (mod_pow(w, r / q, p) == 1) { exact = false; break; }
        if (exact) return w;
    }
}

std::uint64_t rational_mod_p(const Rational& q, std::uint64_t p) {
    mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p));
    if (num < 0) num += mpz_class(static_cast<unsigned long>(p));
    mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p));
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    if (d == 0) throw ConfigError("rational_mod_p: denominator divisible by p");
    return mod_mul(n, mod_inv(d, p), p);
}

std::uint64_t specialize_mod_p(const CycNum& a, std::uint64_t p, std::uint64_t omega) {
    unsigned r = a.r();
    if ((p - 1) % r != 0) throw DomainError("specialize_mod_p: p is not 1 mod r");
    // omega must have multiplicative order exactly r
    if (mod_pow(omega, r, p) != 1) throw DomainError("specialize_mod_p: omega^r != 1");
    for (unsigned d = 1; d < r; ++d)
        if (r % d == 0 && mod_pow(omega, d, p) == 1)
            throw DomainError("specialize_mod_p: omega has order < r");
    std::uint64_t acc = 0, pow = 1;
    for (const auto& c : a.coeffs()) {
        if (c != 0) acc = (acc + mod_mul(rational_mod_p(c, p), pow, p)) % p;
        pow = mod_mul(pow, omega, p);
    }
    return acc;
}

}  // namespace gcp
