#include "gcpoly/semidirect.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gcp {

Rational dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

QVec affine_reflection(const QVec& alpha, long k, const QVec& v) {
    Rational norm = dot(alpha, alpha);
    if (norm == 0) throw DomainError("affine_reflection: zero root");
    Rational factor = (dot(v, alpha) - Rational(k)) * 2 / norm;
    QVec out = v;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] -= factor * alpha[i];
    return out;
}

RootSystem root_system(const std::string& name) {
    auto q = [](std::initializer_list<long> xs) {
        QVec v;
        for (long x : xs) v.push_back(Rational(x));
        return v;
    };
    RootSystem rs;
    rs.name = name;
    if (name == "A1") {
        rs.simple = {q({1, -1})};
        rs.roots = {q({1, -1}), q({-1, 1})};
        rs.highest = q({1, -1});
    } else if (name == "A2") {
        rs.simple = {q({1, -1, 0}), q({0, 1, -1})};
        rs.roots = {q({1, -1, 0}), q({0, 1, -1}), q({1, 0, -1}),
                    q({-1, 1, 0}), q({0, -1, 1}), q({-1, 0, 1})};
        rs.highest = q({1, 0, -1});
    } else if (name == "B2") {
        rs.simple = {q({1, -1}), q({0, 1})};
        rs.roots = {q({1, -1}), q({0, 1}), q({1, 0}), q({1, 1}),
                    q({-1, 1}), q({0, -1}), q({-1, 0}), q({-1, -1})};
        rs.highest = q({1, 1});
    } else {
        throw DomainError("root_system: unknown preset " + name);
    }
    return rs;
}

namespace {

struct SDElemHash {
    std::size_t operator()(const SDElem& e) const {
        std::size_t h = static_cast<std::size_t>(e.first) * 1000003u;
        for (unsigned v : e.second) h = h * 131 + v;
        return h;
    }
};

std::vector<unsigned> mat_apply(const std::vector<unsigned>& mat, unsigned k,
                                const std::vector<unsigned>& v, unsigned m) {
    std::vector<unsigned> out(k, 0);
    for (unsigned i = 0; i < k; ++i) {
        unsigned acc = 0;
        for (unsigned j = 0; j < k; ++j)
            acc = (acc + mat[i * k + j] * v[j]) % m;
        out[i] = acc;
    }
    return out;
}

std::vector<unsigned> mat_mul(const std::vector<unsigned>& a,
                              const std::vector<unsigned>& b, unsigned k,
                              unsigned m) {
    std::vector<unsigned> out(static_cast<std::size_t>(k) * k, 0);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) {
            unsigned acc = 0;
            for (unsigned l = 0; l < k; ++l)
                acc = (acc + a[i * k + l] * b[l * k + j]) % m;
            out[i * k + j] = acc;
        }
    return out;
}

std::vector<unsigned> mat_identity(unsigned k) {
    std::vector<unsigned> out(static_cast<std::size_t>(k) * k, 0);
    for (unsigned i = 0; i < k; ++i) out[i * k + i] = 1;
    return out;
}

}  // namespace

std::vector<unsigned> SemidirectGroup::apply_action(int h_elem,
                                                    const std::vector<unsigned>& v) const {
    return mat_apply(act[static_cast<std::size_t>(h_elem)], k, v, m);
}

int SemidirectGroup::locate(int h_elem, const std::vector<unsigned>& v) const {
    SDElem e{h_elem, v};
    int id = group->find_element(e);
    if (id < 0) throw DomainError("SemidirectGroup::locate: element not found");
    return id;
}

std::string SemidirectGroup::to_json() const {
    std::ostringstream os;
    os << "{\"H\":{\"order\":" << h->order() << ",\"generators\":[";
    for (std::size_t i = 0; i < h->generator_names().size(); ++i)
        os << (i ? "," : "") << "\"" << h->generator_names()[i] << "\"";
    os << "]},\"m\":" << m << ",\"k\":" << k << ",\"action\":[";
    for (std::size_t gi = 0; gi < h->generator_elements().size(); ++gi) {
        if (gi) os << ",";
        const auto& a = act[static_cast<std::size_t>(h->generator_elements()[gi])];
        os << "[";
        for (unsigned i = 0; i < k; ++i) {
            if (i) os << ",";
            os << "[";
            for (unsigned j = 0; j < k; ++j) os << (j ? "," : "") << a[i * k + j];
            os << "]";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

SemidirectGroup make_semidirect(GroupPtr h, unsigned m, unsigned k,
                                const std::vector<std::vector<unsigned>>& gen_action,
                                std::size_t cap) {
    if (m < 2) throw DomainError("make_semidirect: modulus must be at least 2");
    if (gen_action.size() != static_cast<std::size_t>(h->num_generators()))
        throw DomainError("make_semidirect: one action matrix per H generator required");
    for (const auto& a : gen_action)
        if (a.size() != static_cast<std::size_t>(k) * k)
            throw DomainError("make_semidirect: action matrix must be k x k");

    SemidirectGroup g;
    g.h = h;
    g.m = m;
    g.k = k;

    // extend the action along BFS parents, then verify it is a homomorphism
    g.act.resize(static_cast<std::size_t>(h->order()));
    g.act[0] = mat_identity(k);
    for (int e = 1; e < h->order(); ++e) {
        const auto& p = h->parent(e);
        g.act[static_cast<std::size_t>(e)] =
            mat_mul(g.act[static_cast<std::size_t>(p.prev)],
                    gen_action[static_cast<std::size_t>(p.gen)], k, m);
    }
    for (int a = 0; a < h->order(); ++a)
        for (std::size_t gi = 0; gi < gen_action.size(); ++gi) {
            int ag = h->mul(a, h->generator_elements()[gi]);
            if (g.act[static_cast<std::size_t>(ag)] !=
                mat_mul(g.act[static_cast<std::size_t>(a)], gen_action[gi], k, m))
                throw DomainError("make_semidirect: action violates the relation " +
                                  h->element_name(a) + " * " +
                                  h->generator_names()[gi] + " = " +
                                  h->element_name(ag));
        }
    for (int e = 0; e < h->order(); ++e)
        if (mat_mul(g.act[static_cast<std::size_t>(e)],
                    g.act[static_cast<std::size_t>(h->inv(e))], k, m) != mat_identity(k))
            throw DomainError("make_semidirect: action matrix of " + h->element_name(e) +
                              " is singular mod " + std::to_string(m));

    std::vector<std::pair<std::string, SDElem>> gens;
    for (std::size_t gi = 0; gi < gen_action.size(); ++gi)
        gens.emplace_back(h->generator_names()[gi],
                          SDElem{h->generator_elements()[gi], std::vector<unsigned>(k, 0)});
    for (unsigned i = 0; i < k; ++i) {
        std::vector<unsigned> v(k, 0);
        v[i] = 1 % m;
        gens.emplace_back("n" + std::to_string(i + 1), SDElem{0, v});
    }

    auto hp = h;
    auto act = std::make_shared<std::vector<std::vector<unsigned>>>(g.act);
    auto mul = [hp, act, m, k](const SDElem& a, const SDElem& b) {
        std::vector<unsigned> v =
            mat_apply((*act)[static_cast<std::size_t>(hp->inv(b.first))], k, a.second, m);
        for (unsigned i = 0; i < k; ++i) v[i] = (v[i] + b.second[i]) % m;
        return SDElem{hp->mul(a.first, b.first), std::move(v)};
    };
    auto namer = std::function<std::string(const SDElem&)>([hp](const SDElem& e) {
        std::string s = "(" + hp->element_name(e.first) + "|";
        for (std::size_t i = 0; i < e.second.size(); ++i)
            s += (i ? "," : "") + std::to_string(e.second[i]);
        return s + ")";
    });
    g.group = shared_group(FiniteGroup::build<SDElem>(
        SDElem{0, std::vector<unsigned>(k, 0)}, std::move(gens), mul, SDElemHash{},
        [](const SDElem& a, const SDElem& b) { return a < b; }, namer, cap));
    return g;
}

SemidirectGroup affine_quotient(const std::string& roots, unsigned m, std::size_t cap) {
    if (roots == "A1") {
        GroupPtr h = shared_group(symmetric_group(2));
        return make_semidirect(h, m, 1, {{(m - 1) % m}}, cap);
    }
    if (roots == "A2") {
        GroupPtr h = shared_group(symmetric_group(3));
        // simple reflections on the root lattice in the simple-root basis
        std::vector<unsigned> s1 = {(m - 1) % m, 1, 0, 1};
        std::vector<unsigned> s2 = {1, 0, 1, (m - 1) % m};
        return make_semidirect(h, m, 2, {s1, s2}, cap);
    }
    if (roots == "B2") {
        GroupPtr h = shared_group(imprimitive_finite_group(GroupDescriptor(2, 1, 2)));
        // standard basis of Z^2: s1 swaps, t_i negates coordinate i
        std::vector<unsigned> s1 = {0, 1, 1, 0};
        std::vector<unsigned> t1 = {(m - 1) % m, 0, 0, 1};
        std::vector<unsigned> t2 = {1, 0, 0, (m - 1) % m};
        return make_semidirect(h, m, 2, {s1, t1, t2}, cap);
    }
    throw DomainError("affine_quotient: unknown root system " + roots);
}

std::vector<int> conjugacy_reps(const FiniteGroup& h) {
    std::vector<int> out;
    for (const auto& cls : h.classes()) out.push_back(cls.front());
    return out;
}

std::vector<GroupElem> an_cover_set(unsigned num_gens) {
    GroupDescriptor desc(1, 1, num_gens + 1);
    std::vector<GroupElem> out;
    for (unsigned mask = 0; mask < (1u << num_gens); ++mask) {
        GroupElem e = identity_elem(1, num_gens + 1);
        for (unsigned i = 1; i <= num_gens; ++i)
            if (mask & (1u << (i - 1)))
                e = elem_mul(e, monomial_from_generator({'s', i}, desc));
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    return out;
}

std::vector<int> theorem44_gen_set(const SemidirectGroup& g, GenSetVariant variant) {
    std::vector<int> out;
    auto push = [&](int e) {
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    };
    std::vector<unsigned> zero(g.k, 0);
    for (int rep : conjugacy_reps(*g.h)) {
        int e = g.locate(rep, zero);
        if (variant != GenSetVariant::Full && e == g.group->identity()) continue;
        push(e);
    }
    std::vector<int> n_ids;
    for (unsigned i = 0; i < g.k; ++i) {
        std::vector<unsigned> v(g.k, 0);
        v[i] = 1 % g.m;
        n_ids.push_back(g.locate(0, v));
    }
    for (int e : n_ids) push(e);
    if (variant != GenSetVariant::NoInverses)
        for (int e : n_ids) push(g.group->inv(e));
    return out;
}

DiagonalGenerators gr_pn_generators(unsigned r, unsigned p, unsigned n) {
    GroupDescriptor desc(r, p, n);  // validates p | r
    DiagonalGenerators d;
    d.r = r;
    d.p = p;
    d.n = n;
    GroupElem y1 = identity_elem(r, n);
    y1.phases[0] = p % r;
    d.ys.push_back(y1);
    for (unsigned i = 2; i <= n; ++i) {
        GroupElem yi = identity_elem(r, n);
        yi.phases[i - 2] = r - 1;
        yi.phases[i - 1] = 1 % r;
        d.ys.push_back(yi);
    }
    return d;
}

std::vector<unsigned> DiagonalGenerators::decompose(const GroupElem& y) const {
    if (y.r != r || y.perm.size() != n)
        throw DomainError("decompose: element is not an r-phase diagonal of rank n");
    for (unsigned i = 0; i < n; ++i)
        if (y.perm[i] != i) throw DomainError("decompose: element is not diagonal");
    unsigned long sum = 0;
    for (unsigned ph : y.phases) sum += ph;
    if (sum % p != 0)
        throw DomainError("decompose: phase sum " + std::to_string(sum) +
                          " is not divisible by p; element outside A(r,p,n)");
    std::vector<unsigned> e(n, 0);
    e[0] = static_cast<unsigned>((sum / p) % r);
    for (unsigned i = 2; i <= n; ++i) {
        unsigned long tail = 0;
        for (unsigned j = i; j <= n; ++j) tail += y.phases[j - 1];
        e[i - 1] = static_cast<unsigned>(tail % r);
    }
    return e;
}

std::vector<Rep> quotient_rep_family(const SemidirectGroup& g, std::size_t cap) {
    if (static_cast<std::size_t>(g.group->order()) > cap)
        throw ResourceError("quotient_rep_family: group order exceeds cap");
    FieldPtr f = CycloField::get(g.m);
    const FiniteGroup& full = *g.group;
    const FiniteGroup& h = *g.h;
    std::size_t hn = static_cast<std::size_t>(h.order());
    std::size_t h_gens = static_cast<std::size_t>(h.num_generators());

    std::vector<Rep> family;
    auto push_unique = [&](Rep rep) {
        for (const Rep& r : family)
            if (r.dim() == rep.dim() && equivalent_p(r, rep)) return;
        family.push_back(std::move(rep));
    };

    // trivial character
    {
        std::vector<ExactMat> images(static_cast<std::size_t>(full.num_generators()),
                                     ExactMat(1, 1, CycNum::one(f)));
        push_unique(Rep::exact(g.group, f, std::move(images)));
    }

    // monomial reps induced from the characters of N, with basis indexed by
    // H; c = 0 gives the pullback of H's regular representation
    std::vector<unsigned> c(g.k, 0);
    for (;;) {
        std::vector<ExactMat> images;
        for (std::size_t gi = 0; gi < static_cast<std::size_t>(full.num_generators()); ++gi) {
            ExactMat mat(hn, hn, CycNum::zero(f));
            bool is_h_gen = gi < h_gens;
            int h0 = is_h_gen ? h.generator_elements()[gi] : h.identity();
            std::vector<unsigned> v0(g.k, 0);
            if (!is_h_gen) v0[gi - h_gens] = 1 % g.m;
            for (int he = 0; he < h.order(); ++he) {
                std::vector<unsigned> w = g.apply_action(h.inv(he), v0);
                long phase = 0;
                for (unsigned i = 0; i < g.k; ++i)
                    phase += static_cast<long>(c[i]) * w[i];
                mat(static_cast<std::size_t>(h.mul(h0, he)),
                    static_cast<std::size_t>(he)) = CycNum::zeta_pow(f, phase);
            }
            images.push_back(std::move(mat));
        }
        push_unique(Rep::exact(g.group, f, std::move(images)));
        // next character
        unsigned i = 0;
        while (i < g.k && ++c[i] == g.m) c[i++] = 0;
        if (i == g.k) break;
    }

    push_unique(regular_rep(g.group, f, cap));
    return family;
}

}  // namespace gcp
