#include "gcpoly/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gcp {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    // within a degree, lex with x_0 heaviest: smaller means lex-smaller
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(unsigned nvars, FieldPtr field)
    : nvars_(nvars), field_(std::move(field)) {}

MultiPoly MultiPoly::constant(unsigned nvars, const CycNum& c) {
    MultiPoly p(nvars, c.field());
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned k, const FieldPtr& f) {
    if (k >= nvars) throw DomainError("MultiPoly::variable: index out of range");
    MultiPoly p(nvars, f);
    Exponents e(nvars, 0);
    e[k] = 1;
    p.add_term(e, CycNum::one(f));
    return p;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& lead = terms_.rbegin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0l);
}

bool MultiPoly::is_homogeneous(unsigned degree) const {
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0u) != degree) return false;
    return true;
}

CycNum MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycNum::zero(field_) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const CycNum& c) {
    if (e.size() != nvars_) throw DomainError("MultiPoly::add_term: exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (nvars_ != o.nvars_)
        throw DomainError("MultiPoly: variable count mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_, field_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly out(nvars_, field_ ? field_ : o.field_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (unsigned k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::scaled(const CycNum& c) const {
    MultiPoly out(nvars_, field_);
    if (c.is_zero()) return out;
    for (const auto& [e, k] : terms_) out.add_term(e, k * c);
    return out;
}

MultiPoly MultiPoly::truncated(const Exponents& bound) const {
    MultiPoly out(nvars_, field_);
    for (const auto& [e, c] : terms_) {
        bool keep = true;
        for (unsigned k = 0; k < nvars_ && keep; ++k)
            if (e[k] > bound[k]) keep = false;
        if (keep) out.terms_.emplace(e, c);
    }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

CycNum MultiPoly::evaluate(const std::vector<CycNum>& point) const {
    if (point.size() != nvars_) throw DomainError("MultiPoly::evaluate: arity mismatch");
    CycNum acc = CycNum::zero(field_);
    for (const auto& [e, c] : terms_) {
        CycNum term = c;
        for (unsigned k = 0; k < nvars_; ++k)
            for (unsigned j = 0; j < e[k]; ++j) term = term * point[k];
        acc = acc + term;
    }
    return acc;
}

std::uint64_t MultiPoly::evaluate_mod_p(const std::vector<std::uint64_t>& point,
                                        std::uint64_t p, std::uint64_t omega) const {
    if (point.size() != nvars_) throw DomainError("MultiPoly::evaluate_mod_p: arity mismatch");
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t term = specialize_mod_p(c, p, omega);
        for (unsigned k = 0; k < nvars_; ++k)
            if (e[k]) term = mod_mul(term, mod_pow(point[k] % p, e[k], p), p);
        acc = (acc + term) % p;
    }
    return acc;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.to_string() << ")";
        for (unsigned k = 0; k < nvars_; ++k) {
            if (it->first[k] == 0) continue;
            os << "*x" << k;
            if (it->first[k] > 1) os << "^" << it->first[k];
        }
    }
    return os.str();
}

std::string MultiPoly::to_json() const {
    std::ostringstream os;
    os << "{\"nvars\":" << nvars_ << ",\"terms\":[";
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "{\"exp\":[";
        for (unsigned k = 0; k < nvars_; ++k) os << (k ? "," : "") << e[k];
        os << "],\"coeff\":" << c.to_json() << "}";
    }
    os << "]}";
    return os.str();
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& num, const MultiPoly& den) {
    num.check_compatible(den);
    if (den.is_zero()) throw DomainError("MultiPoly::divide_exact: zero divisor");
    MultiPoly rem = num;
    MultiPoly quot(num.nvars_, num.field_ ? num.field_ : den.field_);
    const auto& [de, dc] = *den.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        Exponents q(num.nvars_);
        for (unsigned k = 0; k < num.nvars_; ++k) {
            if (re[k] < de[k])
                throw DomainError("MultiPoly::divide_exact: division leaves a remainder");
            q[k] = re[k] - de[k];
        }
        CycNum qc = rc / dc;
        MultiPoly mono(num.nvars_, quot.field_);
        mono.add_term(q, qc);
        quot = quot + mono;
        rem = rem - mono * den;
    }
    return quot;
}

}  // namespace gcp
