#include "gcpoly/finite_group.hpp"

#include <algorithm>

namespace gcp {

std::vector<int> FiniteGroup::word_for(int elem) const {
    std::vector<int> w;
    int cur = elem;
    while (cur != 0) {
        const Parent& p = parents_[static_cast<std::size_t>(cur)];
        w.push_back(p.gen);
        cur = p.prev;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

void FiniteGroup::compute_classes() const {
    int n = order();
    class_of_.assign(static_cast<std::size_t>(n), -1);
    classes_.clear();
    for (int x = 0; x < n; ++x) {
        if (class_of_[static_cast<std::size_t>(x)] >= 0) continue;
        std::vector<int> orbit;
        int cid = static_cast<int>(classes_.size());
        for (int g = 0; g < n; ++g) {
            int y = mul(mul(g, x), inv(g));
            if (class_of_[static_cast<std::size_t>(y)] < 0) {
                class_of_[static_cast<std::size_t>(y)] = cid;
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes_.push_back(std::move(orbit));
    }
}

const std::vector<std::vector<int>>& FiniteGroup::classes() const {
    if (classes_.empty()) compute_classes();
    return classes_;
}

int FiniteGroup::class_of(int e) const {
    if (classes_.empty()) compute_classes();
    return class_of_[static_cast<std::size_t>(e)];
}

FiniteGroup imprimitive_finite_group(const GroupDescriptor& desc, std::size_t cap) {
    std::vector<std::pair<std::string, GroupElem>> gens;
    for (unsigned i = 1; i < desc.n; ++i)
        gens.emplace_back("s" + std::to_string(i), monomial_from_generator({'s', i}, desc));
    if (desc.p == 1) {
        for (unsigned i = 1; i <= desc.n; ++i)
            gens.emplace_back("t" + std::to_string(i), monomial_from_generator({'t', i}, desc));
    } else {
        GroupElem y1 = identity_elem(desc.r, desc.n);
        y1.phases[0] = desc.p % desc.r;
        gens.emplace_back("y1", y1);
        for (unsigned i = 2; i <= desc.n; ++i) {
            GroupElem yi = identity_elem(desc.r, desc.n);
            yi.phases[i - 2] = desc.r - 1;
            yi.phases[i - 1] = 1;
            gens.emplace_back("y" + std::to_string(i), yi);
        }
    }
    return FiniteGroup::build<GroupElem>(
        identity_elem(desc.r, desc.n), std::move(gens),
        [](const GroupElem& a, const GroupElem& b) { return elem_mul(a, b); },
        GroupElemHash{},
        [](const GroupElem& a, const GroupElem& b) { return a < b; },
        std::function<std::string(const GroupElem&)>(
            [](const GroupElem& g) { return g.to_string(); }),
        cap);
}

FiniteGroup symmetric_group(unsigned m, std::size_t cap) {
    GroupDescriptor desc(1, 1, m);
    std::vector<std::pair<std::string, GroupElem>> gens;
    for (unsigned i = 1; i < m; ++i)
        gens.emplace_back("s" + std::to_string(i), monomial_from_generator({'s', i}, desc));
    return FiniteGroup::build<GroupElem>(
        identity_elem(1, m), std::move(gens),
        [](const GroupElem& a, const GroupElem& b) { return elem_mul(a, b); },
        GroupElemHash{},
        [](const GroupElem& a, const GroupElem& b) { return a < b; },
        std::function<std::string(const GroupElem&)>(
            [](const GroupElem& g) { return g.to_string(); }),
        cap);
}

FiniteGroup cyclic_group(unsigned m) {
    GroupElem g = identity_elem(m, 1);
    g.phases[0] = 1 % m;
    return FiniteGroup::build<GroupElem>(
        identity_elem(m, 1), {{"g", g}},
        [](const GroupElem& a, const GroupElem& b) { return elem_mul(a, b); },
        GroupElemHash{},
        [](const GroupElem& a, const GroupElem& b) { return a < b; },
        std::function<std::string(const GroupElem&)>(
            [](const GroupElem& e) { return e.to_string(); }));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
    using Pair = std::pair<int, int>;
    struct PairHash {
        std::size_t operator()(const Pair& p) const {
            return static_cast<std::size_t>(p.first) * 1000003u +
                   static_cast<std::size_t>(p.second);
        }
    };
    std::vector<std::pair<std::string, Pair>> gens;
    for (int i = 0; i < a.num_generators(); ++i)
        gens.emplace_back(a.generator_names()[static_cast<std::size_t>(i)],
                          Pair{a.generator_elements()[static_cast<std::size_t>(i)], 0});
    for (int i = 0; i < b.num_generators(); ++i)
        gens.emplace_back(b.generator_names()[static_cast<std::size_t>(i)] + "'",
                          Pair{0, b.generator_elements()[static_cast<std::size_t>(i)]});
    auto pa = std::make_shared<FiniteGroup>(a);
    auto pb = std::make_shared<FiniteGroup>(b);
    return FiniteGroup::build<Pair>(
        Pair{0, 0}, std::move(gens),
        [pa, pb](const Pair& x, const Pair& y) {
            return Pair{pa->mul(x.first, y.first), pb->mul(x.second, y.second)};
        },
        PairHash{},
        [](const Pair& x, const Pair& y) { return x < y; },
        nullptr, cap);
}

}  // namespace gcp
