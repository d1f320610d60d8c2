#include "gcpoly/reps.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace gcp {

GroupPtr shared_group(FiniteGroup g) {
    return std::make_shared<const FiniteGroup>(std::move(g));
}

ExactMat monomial_matrix(const GroupElem& e, const FieldPtr& f) {
    unsigned n = static_cast<unsigned>(e.perm.size());
    ExactMat m(n, n, CycNum::zero(f));
    for (unsigned i = 0; i < n; ++i)
        m(e.perm[i], i) = CycNum::zeta_pow(f, static_cast<long>(e.phases[i]));
    return m;
}

namespace {

void check_gen_images(std::size_t expected, std::size_t got, unsigned dim) {
    if (got != expected)
        throw DomainError("Rep: generator image count does not match the group");
    if (dim == 0) throw DomainError("Rep: zero-dimensional image");
}

}  // namespace

Rep Rep::exact(GroupPtr g, FieldPtr f, std::vector<ExactMat> gen_images) {
    Rep rep;
    rep.kind_ = Kind::Exact;
    rep.group_ = std::move(g);
    rep.field_ = std::move(f);
    unsigned dim = gen_images.empty() ? 1 : static_cast<unsigned>(gen_images[0].rows());
    check_gen_images(static_cast<std::size_t>(rep.group_->num_generators()),
                     gen_images.size(), dim);
    for (const auto& m : gen_images)
        if (m.rows() != dim || m.cols() != dim)
            throw DomainError("Rep: image dimension mismatch");
    rep.dim_ = dim;
    rep.exact_.resize(static_cast<std::size_t>(rep.group_->order()));
    rep.exact_[0] = ExactMat::identity(dim, CycNum::zero(rep.field_), CycNum::one(rep.field_));
    // BFS order guarantees the parent precedes its child
    for (int e = 1; e < rep.group_->order(); ++e) {
        const auto& p = rep.group_->parent(e);
        rep.exact_[static_cast<std::size_t>(e)] =
            rep.exact_[static_cast<std::size_t>(p.prev)] *
            gen_images[static_cast<std::size_t>(p.gen)];
    }
    return rep;
}

Rep Rep::floating(GroupPtr g, std::vector<NumMat> gen_images) {
    Rep rep;
    rep.kind_ = Kind::Floating;
    rep.group_ = std::move(g);
    unsigned dim = gen_images.empty() ? 1 : static_cast<unsigned>(gen_images[0].rows());
    check_gen_images(static_cast<std::size_t>(rep.group_->num_generators()),
                     gen_images.size(), dim);
    for (const auto& m : gen_images)
        if (m.rows() != dim || m.cols() != dim)
            throw DomainError("Rep: image dimension mismatch");
    rep.dim_ = dim;
    rep.num_.resize(static_cast<std::size_t>(rep.group_->order()));
    rep.num_[0] = NumMat::Identity(dim, dim);
    for (int e = 1; e < rep.group_->order(); ++e) {
        const auto& p = rep.group_->parent(e);
        rep.num_[static_cast<std::size_t>(e)] =
            rep.num_[static_cast<std::size_t>(p.prev)] *
            gen_images[static_cast<std::size_t>(p.gen)];
    }
    return rep;
}

const ExactMat& Rep::exact_image(int e) const {
    if (kind_ != Kind::Exact) throw DomainError("Rep: exact image of a floating rep");
    return exact_[static_cast<std::size_t>(e)];
}

NumMat Rep::numeric_image(int e) const {
    if (kind_ == Kind::Floating) return num_[static_cast<std::size_t>(e)];
    const ExactMat& m = exact_[static_cast<std::size_t>(e)];
    NumMat out(dim_, dim_);
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j) out(i, j) = m(i, j).to_complex();
    return out;
}

std::string Rep::to_json() const {
    std::ostringstream os;
    os << "{\"dim\":" << dim_ << ",\"entry_kind\":\""
       << (kind_ == Kind::Exact ? "exact" : "floating") << "\",\"images\":{";
    const auto& names = group_->generator_names();
    const auto& gels = group_->generator_elements();
    for (std::size_t k = 0; k < names.size(); ++k) {
        if (k) os << ",";
        os << "\"" << names[k] << "\":[";
        if (kind_ == Kind::Exact) {
            const ExactMat& m = exact_[static_cast<std::size_t>(gels[k])];
            for (unsigned i = 0; i < dim_; ++i) {
                if (i) os << ",";
                os << "[";
                for (unsigned j = 0; j < dim_; ++j)
                    os << (j ? "," : "") << m(i, j).to_json();
                os << "]";
            }
        } else {
            const NumMat& m = num_[static_cast<std::size_t>(gels[k])];
            for (unsigned i = 0; i < dim_; ++i) {
                if (i) os << ",";
                os << "[";
                for (unsigned j = 0; j < dim_; ++j)
                    os << (j ? "," : "") << "[" << m(i, j).real() << "," << m(i, j).imag() << "]";
                os << "]";
            }
        }
        os << "]";
    }
    os << "}}";
    return os.str();
}

RepCheck check_representation(const Rep& rep, double tol) {
    RepCheck out;
    out.pass = true;
    const FiniteGroup& g = *rep.group();
    for (int h = 0; h < g.order(); ++h)
        for (int gi : g.generator_elements()) {
            int hg = g.mul(h, gi);
            if (rep.kind() == Rep::Kind::Exact) {
                if (!(rep.exact_image(h) * rep.exact_image(gi) == rep.exact_image(hg))) {
                    out.pass = false;
                    out.max_residual = 1.0;
                    out.detail = "rho(h)rho(g) != rho(hg) at h=" + g.element_name(h) +
                                 ", g=" + g.element_name(gi);
                    return out;
                }
            } else {
                double res = (rep.numeric_image(h) * rep.numeric_image(gi) -
                              rep.numeric_image(hg)).norm();
                out.max_residual = std::max(out.max_residual, res);
            }
        }
    if (rep.kind() == Rep::Kind::Floating && out.max_residual >= tol) {
        out.pass = false;
        out.detail = "max relation residual " + std::to_string(out.max_residual);
    }
    return out;
}

ClassFunction character(const Rep& rep) {
    ClassFunction cf;
    for (const auto& cls : rep.group()->classes()) {
        int e = cls.front();
        if (rep.kind() == Rep::Kind::Exact) {
            CycNum tr = rep.exact_image(e).trace();
            cf.exact.push_back(tr);
            cf.numeric.push_back(tr.to_complex());
        } else {
            cf.numeric.push_back(rep.numeric_image(e).trace());
        }
    }
    return cf;
}

bool equivalent_p(const Rep& a, const Rep& b, double tol) {
    if (a.group() != b.group())
        throw DomainError("equivalent_p: representations of different groups");
    ClassFunction ca = character(a), cb = character(b);
    if (!ca.exact.empty() && !cb.exact.empty()) {
        for (std::size_t i = 0; i < ca.exact.size(); ++i) {
            CycNum x = ca.exact[i];
            CycNum y = cb.exact[i];
            // distinct r contexts compare through complex embeddings
            if (x.r() == y.r() ? !(x == y)
                               : std::abs(x.to_complex() - y.to_complex()) >= tol)
                return false;
        }
        return true;
    }
    for (std::size_t i = 0; i < ca.numeric.size(); ++i)
        if (std::abs(ca.numeric[i] - cb.numeric[i]) >= tol) return false;
    return true;
}

namespace {

std::pair<char, unsigned> parse_gen_name(const std::string& name) {
    return {name[0], static_cast<unsigned>(std::stoul(name.substr(1)))};
}

}  // namespace

Rep reflection_rep(unsigned r, unsigned n, GroupPtr g) {
    GroupDescriptor desc(r, 1, n);
    if (!g) g = shared_group(imprimitive_finite_group(desc));
    FieldPtr f = CycloField::get(r);
    std::vector<ExactMat> images;
    for (const auto& name : g->generator_names()) {
        auto [kind, idx] = parse_gen_name(name);
        images.push_back(monomial_matrix(monomial_from_generator({kind, idx}, desc), f));
    }
    return Rep::exact(std::move(g), std::move(f), std::move(images));
}

std::vector<Rep> one_dim_characters(unsigned r, unsigned n, GroupPtr g) {
    if (n < 2) throw DomainError("one_dim_characters: n must be at least 2");
    if (!g) g = shared_group(imprimitive_finite_group(GroupDescriptor(r, 1, n)));
    FieldPtr f = CycloField::get(r);
    std::vector<Rep> out;
    for (int eps : {1, -1})
        for (unsigned k = 0; k < r; ++k) {
            std::vector<ExactMat> images;
            for (const auto& name : g->generator_names()) {
                auto [kind, idx] = parse_gen_name(name);
                (void)idx;
                ExactMat m(1, 1, CycNum::zero(f));
                m(0, 0) = (kind == 's') ? CycNum::from_rational(f, eps)
                                        : CycNum::zeta_pow(f, static_cast<long>(k));
                images.push_back(std::move(m));
            }
            out.push_back(Rep::exact(g, f, std::move(images)));
        }
    return out;
}

Rep rep_combine(CombineOp op, const Rep& a, const Rep* b) {
    if (op == CombineOp::Dual) {
        if (b) throw DomainError("rep_combine: dual takes one argument");
        const FiniteGroup& g = *a.group();
        if (a.kind() == Rep::Kind::Exact) {
            std::vector<ExactMat> images;
            for (int ge : g.generator_elements())
                images.push_back(a.exact_image(g.inv(ge)).transpose());
            return Rep::exact(a.group(), a.field(), std::move(images));
        }
        std::vector<NumMat> images;
        for (int ge : g.generator_elements())
            images.push_back(a.numeric_image(g.inv(ge)).transpose());
        return Rep::floating(a.group(), std::move(images));
    }
    if (!b) throw DomainError("rep_combine: binary operation needs two reps");
    if (a.group() != b->group()) throw DomainError("rep_combine: group mismatch");
    if (a.kind() != b->kind()) throw DomainError("rep_combine: entry kind mismatch");
    const FiniteGroup& g = *a.group();
    if (a.kind() == Rep::Kind::Exact) {
        CycNum z = CycNum::zero(a.field());
        std::vector<ExactMat> images;
        for (int ge : g.generator_elements()) {
            const ExactMat& ma = a.exact_image(ge);
            const ExactMat& mb = b->exact_image(ge);
            images.push_back(op == CombineOp::Tensor ? ExactMat::tensor(ma, mb)
                                                     : ExactMat::direct_sum(ma, mb, z));
        }
        return Rep::exact(a.group(), a.field(), std::move(images));
    }
    std::vector<NumMat> images;
    for (int ge : g.generator_elements()) {
        NumMat ma = a.numeric_image(ge);
        NumMat mb = b->numeric_image(ge);
        if (op == CombineOp::Tensor) {
            NumMat t(ma.rows() * mb.rows(), ma.cols() * mb.cols());
            for (int i = 0; i < ma.rows(); ++i)
                for (int j = 0; j < ma.cols(); ++j)
                    t.block(i * mb.rows(), j * mb.cols(), mb.rows(), mb.cols()) =
                        ma(i, j) * mb;
            images.push_back(std::move(t));
        } else {
            NumMat d = NumMat::Zero(ma.rows() + mb.rows(), ma.cols() + mb.cols());
            d.topLeftCorner(ma.rows(), ma.cols()) = ma;
            d.bottomRightCorner(mb.rows(), mb.cols()) = mb;
            images.push_back(std::move(d));
        }
    }
    return Rep::floating(a.group(), std::move(images));
}

Rep galois_twist(const Rep& rep, long j) {
    if (rep.kind() != Rep::Kind::Exact)
        throw DomainError("galois_twist: exact representations only");
    const FiniteGroup& g = *rep.group();
    std::vector<ExactMat> images;
    for (int ge : g.generator_elements()) {
        ExactMat m = rep.exact_image(ge);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = m(i, k).galois(j);
        images.push_back(std::move(m));
    }
    return Rep::exact(rep.group(), rep.field(), std::move(images));
}

Rep regular_rep(GroupPtr g, FieldPtr f, std::size_t cap) {
    if (static_cast<std::size_t>(g->order()) > cap)
        throw ResourceError("regular_rep: group order exceeds cap");
    unsigned n = static_cast<unsigned>(g->order());
    std::vector<ExactMat> images;
    for (int ge : g->generator_elements()) {
        ExactMat m(n, n, CycNum::zero(f));
        for (int h = 0; h < g->order(); ++h)
            m(static_cast<std::size_t>(g->mul(ge, h)), static_cast<std::size_t>(h)) =
                CycNum::one(f);
        images.push_back(std::move(m));
    }
    return Rep::exact(std::move(g), std::move(f), std::move(images));
}

ExactMat gauss_inverse(const ExactMat& m) {
    if (m.rows() != m.cols()) throw DomainError("gauss_inverse: not square");
    std::size_t n = m.rows();
    const CycNum any = m(0, 0);
    CycNum zero = any - any;
    CycNum one = zero;
    ExactMat a = m;
    ExactMat inv(n, n, zero);
    // build identity with the field of the input
    {
        FieldPtr f = any.field() ? any.field() : CycloField::get(1);
        one = CycNum::one(f);
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = one;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) throw DomainError("gauss_inverse: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        CycNum d = a(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = a(col, j) * d;
            inv(col, j) = inv(col, j) * d;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a(row, col).is_zero()) continue;
            CycNum factor = a(row, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(row, j) = a(row, j) - factor * a(col, j);
                inv(row, j) = inv(row, j) - factor * inv(col, j);
            }
        }
    }
    return inv;
}

Rep conjugated(const Rep& rep, const ExactMat& x) {
    if (rep.kind() != Rep::Kind::Exact)
        throw DomainError("conjugated: exact representations only");
    ExactMat xinv = gauss_inverse(x);
    std::vector<ExactMat> images;
    for (int ge : rep.group()->generator_elements())
        images.push_back(xinv * rep.exact_image(ge) * x);
    return Rep::exact(rep.group(), rep.field(), std::move(images));
}

std::vector<Constituent> decompose_regular(const GroupPtr& g, std::uint64_t seed,
                                           double tol, std::size_t cap) {
    if (static_cast<std::size_t>(g->order()) > cap)
        throw ResourceError("decompose_regular: group order exceeds cap");
    int n = g->order();

    // permutation images of the left regular representation, one per element
    auto perm_image = [&](int e) {
        NumMat m = NumMat::Zero(n, n);
        for (int h = 0; h < n; ++h) m(g->mul(e, h), h) = 1.0;
        return m;
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    NumMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = std::complex<double>(u(rng), u(rng));
    NumMat h0 = a + a.adjoint();

    // average into the commutant: H = (1/|G|) sum_g rho(g) H0 rho(g)^{-1};
    // permutation images make this an index shuffle
    NumMat h = NumMat::Zero(n, n);
    for (int e = 0; e < n; ++e)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) h(g->mul(e, x), g->mul(e, y)) += h0(x, y);
    h /= static_cast<double>(n);

    Eigen::SelfAdjointEigenSolver<NumMat> es(h);
    if (es.info() != Eigen::Success)
        throw ConfigError("decompose_regular: eigensolver failed to converge");
    const auto& evals = es.eigenvalues();
    double scale = std::max(1.0, std::abs(evals(n - 1)) + std::abs(evals(0)));
    double gap_tol = 1e-7 * scale;

    std::vector<Constituent> unique;
    int lo = 0;
    while (lo < n) {
        int hi = lo + 1;
        while (hi < n && evals(hi) - evals(hi - 1) < gap_tol) ++hi;
        NumMat basis = es.eigenvectors().middleCols(lo, hi - lo);
        std::vector<NumMat> gen_images;
        for (int ge : g->generator_elements())
            gen_images.push_back(basis.adjoint() * perm_image(ge) * basis);
        Rep pi = Rep::floating(g, std::move(gen_images));
        ClassFunction chi = character(pi);

        bool merged = false;
        for (auto& c : unique) {
            if (c.rep.dim() != pi.dim()) continue;
            ClassFunction prev = character(c.rep);
            double diff = 0;
            for (std::size_t i = 0; i < chi.numeric.size(); ++i)
                diff = std::max(diff, std::abs(chi.numeric[i] - prev.numeric[i]));
            if (diff < std::max(1e-4, 100 * tol)) {
                ++c.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) unique.push_back({std::move(pi), 1});
        lo = hi;
    }

    long sum_sq = 0;
    for (const auto& c : unique) {
        if (c.multiplicity != c.rep.dim())
            throw ConfigError("decompose_regular: multiplicity " +
                              std::to_string(c.multiplicity) + " != dimension " +
                              std::to_string(c.rep.dim()) +
                              "; eigenvalue gap threshold " + std::to_string(gap_tol));
        sum_sq += static_cast<long>(c.multiplicity) * c.rep.dim();
    }
    if (sum_sq != n)
        throw ConfigError("decompose_regular: dimension squares sum to " +
                          std::to_string(sum_sq) + ", expected " + std::to_string(n));

    auto fingerprint = [](const Rep& r) {
        ClassFunction cf = character(r);
        std::vector<std::pair<long, long>> fp;
        for (auto v : cf.numeric)
            fp.emplace_back(std::lround(v.real() * 1e6), std::lround(v.imag() * 1e6));
        return fp;
    };
    std::sort(unique.begin(), unique.end(), [&](const Constituent& x, const Constituent& y) {
        if (x.rep.dim() != y.rep.dim()) return x.rep.dim() < y.rep.dim();
        return fingerprint(x.rep) < fingerprint(y.rep);
    });
    return unique;
}

}  // namespace gcp
