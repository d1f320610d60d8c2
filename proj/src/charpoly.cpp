#include "gcpoly/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace gcp {

Pencil make_pencil(const Rep& rep, bool include_identity) {
    std::vector<int> gens = rep.group()->generator_elements();
    return make_pencil(rep, std::move(gens), include_identity);
}

Pencil make_pencil(const Rep& rep, std::vector<int> gen_set, bool include_identity) {
    for (int e : gen_set)
        if (e < 0 || e >= rep.group()->order())
            throw DomainError("make_pencil: generator outside the group");
    return {&rep, std::move(gen_set), include_identity};
}

Mat<MultiPoly> pencil_matrix(const Pencil& p) {
    const Rep& rep = *p.rep;
    if (rep.kind() != Rep::Kind::Exact)
        throw DomainError("pencil_matrix: exact representations only");
    unsigned nv = p.nvars();
    unsigned d = rep.dim();
    FieldPtr f = rep.field();
    Mat<MultiPoly> m(d, d, MultiPoly::zero(nv, f));
    unsigned var = 0;
    if (p.include_identity) {
        MultiPoly x0 = MultiPoly::variable(nv, 0, f);
        for (unsigned i = 0; i < d; ++i) m(i, i) = m(i, i) + x0;
        var = 1;
    }
    for (int ge : p.gens) {
        const ExactMat& img = rep.exact_image(ge);
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j)
                if (!img(i, j).is_zero()) {
                    MultiPoly t(nv, f);
                    Exponents e(nv, 0);
                    e[var] = 1;
                    t.add_term(e, img(i, j));
                    m(i, j) = m(i, j) + t;
                }
        ++var;
    }
    return m;
}

MultiPoly det_cofactor(const Mat<MultiPoly>& m) {
    std::size_t n = m.rows();
    if (n != m.cols()) throw DomainError("det_cofactor: not square");
    if (n == 1) return m(0, 0);
    MultiPoly acc;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        Mat<MultiPoly> minor(n - 1, n - 1, m(0, 0));
        for (std::size_t r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            for (std::size_t c = 1; c < n; ++c) minor(mr, c - 1) = m(r, c);
            ++mr;
        }
        MultiPoly term = m(i, 0) * det_cofactor(minor);
        if (i % 2) term = -term;
        acc = first ? term : acc + term;
        first = false;
    }
    return acc;
}

MultiPoly det_exact(const Pencil& p, unsigned dim_cap) {
    const Rep& rep = *p.rep;
    if (rep.dim() > dim_cap)
        throw ResourceError(
            "det_exact: dimension " + std::to_string(rep.dim()) +
            " exceeds the exact-expansion cap; use charpoly_equal instead");
    Mat<MultiPoly> m = pencil_matrix(p);
    std::size_t n = m.rows();
    if (n == 1) return m(0, 0);

    // fraction-free elimination: every division by the previous pivot is exact
    MultiPoly prev = MultiPoly::constant(p.nvars(), CycNum::one(rep.field()));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k).is_zero()) ++piv;
            if (piv == n) return MultiPoly::zero(p.nvars(), rep.field());
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = MultiPoly::divide_exact(m(k, k) * m(i, j) - m(i, k) * m(k, j),
                                                  prev);
        prev = m(k, k);
    }
    MultiPoly det = m(n - 1, n - 1);
    return negate ? -det : det;
}

namespace {

std::uint64_t det_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    std::size_t n = m.size();
    std::uint64_t det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = p - det;
        }
        det = mod_mul(det, m[k][k], p);
        std::uint64_t inv = mod_inv(m[k][k], p);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            std::uint64_t f = mod_mul(m[i][k], inv, p);
            for (std::size_t j = k; j < n; ++j)
                m[i][j] = (m[i][j] + p - mod_mul(f, m[k][j], p)) % p;
        }
    }
    return det % p;
}

std::vector<std::vector<std::uint64_t>> specialize_images(
    const Rep& rep, const std::vector<int>& gens, std::uint64_t p,
    std::uint64_t omega_r) {
    unsigned d = rep.dim();
    std::vector<std::vector<std::uint64_t>> out;
    for (int ge : gens) {
        const ExactMat& img = rep.exact_image(ge);
        std::vector<std::uint64_t> flat(static_cast<std::size_t>(d) * d);
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j)
                flat[static_cast<std::size_t>(i) * d + j] =
                    specialize_mod_p(img(i, j), p, omega_r);
        out.push_back(std::move(flat));
    }
    return out;
}

std::uint64_t pencil_det_at(const std::vector<std::vector<std::uint64_t>>& images,
                            unsigned d, const std::vector<std::uint64_t>& point,
                            std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> m(d, std::vector<std::uint64_t>(d, 0));
    for (unsigned i = 0; i < d; ++i) m[i][i] = point[0] % p;
    for (std::size_t k = 0; k < images.size(); ++k)
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j)
                m[i][j] = (m[i][j] +
                           mod_mul(point[k + 1] % p,
                                   images[k][static_cast<std::size_t>(i) * d + j], p)) %
                          p;
    return det_mod_p(std::move(m), p);
}

}  // namespace

std::string PitVerdict::to_json() const {
    std::ostringstream os;
    os << "{\"equal\":" << (equal ? "true" : "false") << ",\"prime\":" << prime
       << ",\"trials\":" << trials << ",\"bound\":" << bound << ",\"witness\":[";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << "],\"note\":\"" << note << "\"}";
    return os.str();
}

PitVerdict charpoly_equal(const Rep& a, const Rep& b,
                          const std::vector<int>& gen_set, unsigned trials,
                          std::uint64_t seed) {
    if (a.group() != b.group())
        throw DomainError("charpoly_equal: representations of different groups");
    if (a.kind() != Rep::Kind::Exact || b.kind() != Rep::Kind::Exact)
        throw DomainError("charpoly_equal: exact representations only");
    PitVerdict v;
    v.trials = trials;
    if (a.dim() != b.dim()) {
        v.equal = false;
        v.note = "degree mismatch: " + std::to_string(a.dim()) + " vs " +
                 std::to_string(b.dim());
        return v;
    }
    unsigned ra = a.field()->r(), rb = b.field()->r();
    unsigned r = std::lcm(ra, rb);
    std::uint64_t p = pit_prime(r);
    std::uint64_t omega = root_of_unity_mod_p(r, p);
    v.prime = p;

    auto sa = specialize_images(a, gen_set, p, mod_pow(omega, r / ra, p));
    auto sb = specialize_images(b, gen_set, p, mod_pow(omega, r / rb, p));
    unsigned nv = static_cast<unsigned>(gen_set.size()) + 1;
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        std::vector<std::uint64_t> point(nv);
        for (auto& x : point) x = rng() % p;
        std::uint64_t da = pencil_det_at(sa, a.dim(), point, p);
        std::uint64_t db = pencil_det_at(sb, b.dim(), point, p);
        if (da != db) {
            v.equal = false;
            v.witness = point;
            v.note = "determinants differ modulo " + std::to_string(p);
            return v;
        }
    }
    v.equal = true;
    v.bound = std::pow(static_cast<double>(a.dim()) / static_cast<double>(p),
                       static_cast<double>(trials));
    return v;
}

namespace {

/// Variable index of a letter in the signature layout
/// (a_1, b_1, ..., a_{n-1}, b_{n-1}, b_n).
unsigned letter_var(const Letter& l, unsigned n) {
    if (l.kind == 's') return 2 * (l.index - 1);
    return (l.index < n) ? 2 * (l.index - 1) + 1 : 2 * n - 2;
}

int gen_id_for_letter(const FiniteGroup& g, const Letter& l) {
    std::string name = std::string(1, l.kind) + std::to_string(l.index);
    const auto& names = g.generator_names();
    for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return g.generator_elements()[k];
    throw DomainError("signature_sum: group has no generator named " + name);
}

}  // namespace

CycNum signature_sum(const Rep& rep, const Signature& alpha, unsigned n,
                     SigSumMethod method, std::size_t weight_cap) {
    if (rep.kind() != Rep::Kind::Exact)
        throw DomainError("signature_sum: exact representations only");
    if (alpha.size() != 2 * static_cast<std::size_t>(n) - 1)
        throw DomainError("signature_sum: signature length does not match n");
    std::size_t m = std::accumulate(alpha.begin(), alpha.end(), std::size_t{0});
    FieldPtr f = rep.field();
    const FiniteGroup& g = *rep.group();

    if (method == SigSumMethod::Brute) {
        if (m > weight_cap) throw ResourceError("signature_sum: |alpha| exceeds cap");
        CycNum acc = CycNum::zero(f);
        for (const Word& w : enumerate_words(alpha, n, weight_cap)) {
            int e = g.identity();
            for (const Letter& l : w) e = g.mul(e, gen_id_for_letter(g, l));
            acc = acc + rep.exact_image(e).trace();
        }
        return acc;
    }

    // coefficient extraction from Tr((sum_k x_k rho(g_k))^m), truncated to
    // the target exponents after every product
    if (m == 0) return CycNum::from_rational(f, rep.dim());
    unsigned nv = 2 * n - 1;
    Mat<MultiPoly> pm(rep.dim(), rep.dim(), MultiPoly::zero(nv, f));
    for (unsigned var = 0; var < nv; ++var) {
        Letter l;
        if (var == 2 * n - 2) l = {'t', n, 0};
        else if (var % 2 == 0) l = {'s', var / 2 + 1, 0};
        else l = {'t', var / 2 + 1, 0};
        const ExactMat& img = rep.exact_image(gen_id_for_letter(g, l));
        for (unsigned i = 0; i < rep.dim(); ++i)
            for (unsigned j = 0; j < rep.dim(); ++j)
                if (!img(i, j).is_zero()) {
                    Exponents e(nv, 0);
                    e[var] = 1;
                    pm(i, j).add_term(e, img(i, j));
                }
    }
    auto truncate_mat = [&](Mat<MultiPoly>& mat) {
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < mat.cols(); ++j)
                mat(i, j) = mat(i, j).truncated(alpha);
    };
    truncate_mat(pm);
    Mat<MultiPoly> power = pm;
    for (std::size_t step = 1; step < m; ++step) {
        power = power * pm;
        truncate_mat(power);
    }
    return power.trace().coefficient(alpha);
}

FrobeniusReport frobenius_check(const GroupPtr& g, std::uint64_t seed, double tol,
                                unsigned points) {
    FrobeniusReport rep;
    rep.points = points;
    int n = g->order();
    auto perm_image = [&](int e) {
        NumMat m = NumMat::Zero(n, n);
        for (int h = 0; h < n; ++h) m(g->mul(e, h), h) = 1.0;
        return m;
    };
    auto constituents = decompose_regular(g, seed);

    // log-determinant keeps 200x200 products inside double range; branch
    // ambiguity cancels in the exponentiated ratio
    auto log_det = [](const NumMat& m) {
        Eigen::PartialPivLU<NumMat> lu(m);
        std::complex<double> acc = std::log(
            std::complex<double>(static_cast<double>(lu.permutationP().determinant()), 0));
        for (int i = 0; i < m.rows(); ++i) acc += std::log(std::complex<double>(lu.matrixLU()(i, i)));
        return acc;
    };

    const auto& gens = g->generator_elements();
    std::vector<NumMat> reg_images;
    for (int ge : gens) reg_images.push_back(perm_image(ge));

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (unsigned pt = 0; pt < points; ++pt) {
        std::vector<std::complex<double>> x(gens.size() + 1);
        for (auto& z : x) z = {u(rng), u(rng)};
        NumMat reg = x[0] * NumMat::Identity(n, n);
        for (std::size_t k = 0; k < gens.size(); ++k) reg += x[k + 1] * reg_images[k];
        std::complex<double> ld_reg = log_det(reg);
        std::complex<double> ld_prod = 0;
        for (const auto& c : constituents) {
            int d = static_cast<int>(c.rep.dim());
            NumMat m = x[0] * NumMat::Identity(d, d);
            for (std::size_t k = 0; k < gens.size(); ++k)
                m += x[k + 1] * c.rep.numeric_image(gens[k]);
            ld_prod += static_cast<double>(c.multiplicity) * log_det(m);
        }
        double err = std::abs(std::exp(ld_reg - ld_prod) - 1.0);
        rep.max_rel_err = std::max(rep.max_rel_err, err);
    }
    rep.pass = rep.max_rel_err < tol;
    if (!rep.pass)
        rep.detail = "max relative error " + std::to_string(rep.max_rel_err);
    return rep;
}

}  // namespace gcp
