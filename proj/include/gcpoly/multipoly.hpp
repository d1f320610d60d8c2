#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcpoly/cyclotomic.hpp"

namespace gcp {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, x_0 > x_1 > ... within each total degree.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q(zeta_r). Canonical: no zero
/// coefficients stored, terms iterate in descending grlex order.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(unsigned nvars, FieldPtr field);

    static MultiPoly zero(unsigned nvars, const FieldPtr& f) { return {nvars, f}; }
    static MultiPoly constant(unsigned nvars, const CycNum& c);
    /// The variable x_k.
    static MultiPoly variable(unsigned nvars, unsigned k, const FieldPtr& f);

    unsigned nvars() const { return nvars_; }
    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    long total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous(unsigned degree) const;

    /// Ascending grlex iteration; the leading term is the last entry.
    const std::map<Exponents, CycNum, GrlexLess>& terms() const { return terms_; }
    CycNum coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const CycNum& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const CycNum& c) const;

    /// Drops every term whose exponents exceed `bound` componentwise anywhere.
    MultiPoly truncated(const Exponents& bound) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    CycNum evaluate(const std::vector<CycNum>& point) const;
    std::uint64_t evaluate_mod_p(const std::vector<std::uint64_t>& point,
                                 std::uint64_t p, std::uint64_t omega) const;

    std::string to_string() const;
    std::string to_json() const;

    /// Exact quotient; throws DomainError when the division leaves a remainder.
    static MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den);

private:
    unsigned nvars_ = 0;
    FieldPtr field_;
    std::map<Exponents, CycNum, GrlexLess> terms_;
    void check_compatible(const MultiPoly& o) const;
};

}  // namespace gcp
