#include "gcpoly/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

namespace gcp {

GroupDescriptor::GroupDescriptor(unsigned r_, unsigned p_, unsigned n_, GroupKind k)
    : r(r_), p(p_), n(n_), kind(k) {
    if (r == 0 || p == 0 || n == 0) throw DomainError("GroupDescriptor: r, p, n must be positive");
    if (r % p != 0) throw DomainError("GroupDescriptor: p must divide r");
}

std::uint64_t GroupDescriptor::order() const {
    std::uint64_t o = 1;
    for (unsigned i = 0; i < n; ++i) o *= r;
    for (unsigned i = 2; i <= n; ++i) o *= i;
    return o / p;
}

std::string GroupDescriptor::to_json() const {
    std::ostringstream os;
    os << "{\"r\":" << r << ",\"p\":" << p << ",\"n\":" << n << "}";
    return os.str();
}

std::string GroupElem::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) os << " ";
        os << perm[i] + 1 << "^" << phases[i];
    }
    os << "]";
    return os.str();
}

std::string GroupElem::to_json() const {
    std::ostringstream os;
    os << "{\"perm\":[";
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) os << ",";
        os << perm[i] + 1;
    }
    os << "],\"phases\":[";
    for (std::size_t i = 0; i < phases.size(); ++i) {
        if (i) os << ",";
        os << phases[i];
    }
    os << "]}";
    return os.str();
}

std::size_t GroupElemHash::operator()(const GroupElem& g) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(g.r);
    for (auto v : g.perm) mix(v);
    for (auto v : g.phases) mix(v);
    return h;
}

GroupElem identity_elem(unsigned r, unsigned n) {
    GroupElem e;
    e.r = r;
    e.perm.resize(n);
    e.phases.assign(n, 0);
    for (unsigned i = 0; i < n; ++i) e.perm[i] = i;
    return e;
}

GroupElem elem_mul(const GroupElem& a, const GroupElem& b) {
    if (a.r != b.r || a.n() != b.n()) throw DomainError("elem_mul: descriptor mismatch");
    GroupElem c;
    c.r = a.r;
    unsigned n = a.n();
    c.perm.resize(n);
    c.phases.resize(n);
    // Matrix product: column i of a*b carries zeta^{a.phases[b.perm[i]] + b.phases[i]}
    // in row a.perm[b.perm[i]].
    for (unsigned i = 0; i < n; ++i) {
        c.perm[i] = a.perm[b.perm[i]];
        c.phases[i] = (a.phases[b.perm[i]] + b.phases[i]) % a.r;
    }
    return c;
}

GroupElem elem_inv(const GroupElem& a) {
    GroupElem b;
    b.r = a.r;
    unsigned n = a.n();
    b.perm.resize(n);
    b.phases.resize(n);
    for (unsigned i = 0; i < n; ++i) b.perm[a.perm[i]] = i;
    for (unsigned i = 0; i < n; ++i)
        b.phases[i] = (a.r - a.phases[b.perm[i]] % a.r) % a.r;
    return b;
}

GroupElem monomial_from_generator(GenLetter gen, const GroupDescriptor& desc) {
    unsigned n = desc.n;
    if (gen.kind == 's') {
        if (gen.index < 1 || gen.index > n - 1)
            throw DomainError("monomial_from_generator: s-index out of range");
        GroupElem e = identity_elem(desc.r, n);
        std::swap(e.perm[gen.index - 1], e.perm[gen.index]);
        return e;
    }
    if (gen.kind != 't') throw DomainError("monomial_from_generator: unknown letter kind");
    if (gen.index < 1 || gen.index > n)
        throw DomainError("monomial_from_generator: t-index out of range");
    GroupElem tn = identity_elem(desc.r, n);
    tn.phases[n - 1] = 1 % desc.r;
    if (gen.index == n) return tn;
    // t_i = s_i ... s_{n-1} t_n s_{n-1} ... s_i
    GroupElem acc = tn;
    for (unsigned j = n - 1; j >= gen.index; --j) {
        GroupElem s = monomial_from_generator({'s', j}, desc);
        acc = elem_mul(elem_mul(s, acc), s);
    }
    return acc;
}

std::vector<GroupElem> bfs_closure(const std::vector<GroupElem>& gens,
                                   const GroupElem& id, std::size_t cap) {
    std::vector<GroupElem> out;
    std::unordered_set<GroupElem, GroupElemHash> seen;
    out.push_back(id);
    seen.insert(id);
    std::vector<GroupElem> frontier = {id};
    while (!frontier.empty()) {
        std::vector<GroupElem> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                GroupElem y = elem_mul(x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        for (const auto& y : next) {
            out.push_back(y);
            if (out.size() > cap) throw ResourceError("bfs_closure: group order exceeds cap");
        }
        frontier = std::move(next);
    }
    return out;
}

std::vector<GroupElem> enumerate_group(const GroupDescriptor& desc, std::size_t cap) {
    if (desc.order() > cap) throw ResourceError("enumerate_group: order exceeds cap");
    std::vector<GroupElem> gens;
    for (unsigned i = 1; i < desc.n; ++i)
        gens.push_back(monomial_from_generator({'s', i}, desc));
    if (desc.p == 1) {
        for (unsigned i = 1; i <= desc.n; ++i)
            gens.push_back(monomial_from_generator({'t', i}, desc));
    } else {
        // G(r,p,n) = Sigma_n x| A(r,p,n); diagonal part from the y-generators.
        GroupElem y1 = identity_elem(desc.r, desc.n);
        y1.phases[0] = desc.p % desc.r;
        gens.push_back(y1);
        for (unsigned i = 2; i <= desc.n; ++i) {
            GroupElem yi = identity_elem(desc.r, desc.n);
            yi.phases[i - 2] = desc.r - 1;
            yi.phases[i - 1] = 1;
            gens.push_back(yi);
        }
    }
    return bfs_closure(gens, identity_elem(desc.r, desc.n), cap);
}

std::vector<std::vector<GroupElem>> conjugacy_classes(const std::vector<GroupElem>& elements) {
    std::unordered_set<GroupElem, GroupElemHash> all(elements.begin(), elements.end());
    if (all.size() != elements.size())
        throw DomainError("conjugacy_classes: duplicate elements");
    // closure check
    for (const auto& a : elements) {
        if (!all.count(elem_inv(a)))
            throw DomainError("conjugacy_classes: input not closed under inverse");
    }
    for (const auto& a : elements)
        for (const auto& b : elements)
            if (!all.count(elem_mul(a, b)))
                throw DomainError("conjugacy_classes: input not closed under product");

    std::vector<std::vector<GroupElem>> classes;
    std::unordered_set<GroupElem, GroupElemHash> assigned;
    for (const auto& x : elements) {
        if (assigned.count(x)) continue;
        std::vector<GroupElem> orbit;
        std::unordered_set<GroupElem, GroupElemHash> orbit_set;
        for (const auto& g : elements) {
            GroupElem y = elem_mul(elem_mul(g, x), elem_inv(g));
            if (orbit_set.insert(y).second) orbit.push_back(y);
        }
        std::sort(orbit.begin(), orbit.end());
        for (const auto& y : orbit) assigned.insert(y);
        classes.push_back(std::move(orbit));
    }
    return classes;
}

std::vector<std::pair<unsigned, unsigned>> color_cycle_invariant(const GroupElem& a) {
    unsigned n = a.n();
    std::vector<bool> seen(n, false);
    std::vector<std::pair<unsigned, unsigned>> inv;
    for (unsigned i = 0; i < n; ++i) {
        if (seen[i]) continue;
        unsigned len = 0, sum = 0, j = i;
        do {
            seen[j] = true;
            ++len;
            sum = (sum + a.phases[j]) % a.r;
            j = a.perm[j];
        } while (j != i);
        inv.emplace_back(len, sum);
    }
    std::sort(inv.begin(), inv.end());
    return inv;
}

bool is_conjugate_brute(const GroupElem& a, const GroupElem& b,
                        const std::vector<GroupElem>& group) {
    // Conjugation by a monomial matrix preserves the color-cycle invariant,
    // so unequal invariants rule conjugacy out. Equal invariants are not
    // authoritative (p > 1 can merge classes); fall through to brute force.
    if (color_cycle_invariant(a) != color_cycle_invariant(b)) return false;
    for (const auto& g : group)
        if (elem_mul(elem_mul(g, a), elem_inv(g)) == b) return true;
    return false;
}

}  // namespace gcp
