#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcpoly/group.hpp"

namespace gcp {

/// Type-erased finite group: elements indexed 0..order-1 with 0 = identity,
/// in BFS-by-word-length order with a deterministic tie-break. Keeps a BFS
/// parent link per element so any element can be expanded as a generator word.
class FiniteGroup {
public:
    struct Parent {
        int prev = -1;  // -1 for the identity
        int gen = -1;
    };

    int order() const { return static_cast<int>(order_); }
    int identity() const { return 0; }
    int mul(int a, int b) const { return mul_(a, b); }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

    int num_generators() const { return static_cast<int>(gen_elems_.size()); }
    const std::vector<std::string>& generator_names() const { return gen_names_; }
    const std::vector<int>& generator_elements() const { return gen_elems_; }

    /// Generator-index word with element == product of generators left to right.
    std::vector<int> word_for(int elem) const;

    /// BFS predecessor link: elem = parent.prev * generator[parent.gen].
    const Parent& parent(int elem) const { return parents_[static_cast<std::size_t>(elem)]; }

    std::string element_name(int e) const { return namer_ ? namer_(e) : std::to_string(e); }

    /// Index of a concrete value, -1 if absent. T must be the exact type the
    /// group was built from.
    template <class T>
    int find_element(const T& x) const {
        return finder_(static_cast<const void*>(&x));
    }

    /// Conjugation orbits, each sorted ascending, ordered by least member.
    const std::vector<std::vector<int>>& classes() const;
    int class_of(int e) const;

    /// Build from concrete elements. `mul` composes concrete values; `less`
    /// fixes the intra-layer BFS tie-break.
    template <class T, class Mul, class Hash, class Less>
    static FiniteGroup build(const T& id,
                             std::vector<std::pair<std::string, T>> gens,
                             Mul mul, Hash hash, Less less,
                             std::function<std::string(const T&)> namer = nullptr,
                             std::size_t cap = 20000);

private:
    std::size_t order_ = 0;
    std::function<int(int, int)> mul_;
    std::vector<int> inv_;
    std::vector<std::string> gen_names_;
    std::vector<int> gen_elems_;
    std::vector<Parent> parents_;
    std::function<std::string(int)> namer_;
    std::function<int(const void*)> finder_;
    mutable std::vector<std::vector<int>> classes_;
    mutable std::vector<int> class_of_;
    void compute_classes() const;
};

/// G(r,p,n) as a FiniteGroup over monomial matrices. For p = 1 the generators
/// are the standard s_1..s_{n-1}, t_1..t_n; for p > 1 they are s_1..s_{n-1}
/// and the diagonal y_1..y_n.
FiniteGroup imprimitive_finite_group(const GroupDescriptor& desc, std::size_t cap = 20000);

/// Symmetric group on m points from adjacent transpositions s_1..s_{m-1}.
FiniteGroup symmetric_group(unsigned m, std::size_t cap = 20000);

/// Cyclic group of order m, one generator "g".
FiniteGroup cyclic_group(unsigned m);

/// Direct product; generators are both factors' generators, second factor's
/// names suffixed with a prime.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::size_t cap = 20000);

// template implementation

template <class T, class Mul, class Hash, class Less>
FiniteGroup FiniteGroup::build(const T& id,
                               std::vector<std::pair<std::string, T>> gens,
                               Mul mul, Hash hash, Less less,
                               std::function<std::string(const T&)> namer,
                               std::size_t cap) {
    auto elems = std::make_shared<std::vector<T>>();
    auto index = std::make_shared<std::unordered_map<T, int, Hash>>(16, hash);
    std::vector<Parent> parents;

    auto intern = [&](const T& x) {
        auto it = index->find(x);
        if (it != index->end()) return std::pair<int, bool>{it->second, false};
        int id_new = static_cast<int>(elems->size());
        elems->push_back(x);
        index->emplace(x, id_new);
        parents.push_back({});
        return std::pair<int, bool>{id_new, true};
    };

    intern(id);
    std::vector<int> frontier = {0};
    while (!frontier.empty()) {
        // collect the next layer, then sort it by concrete value for determinism
        std::vector<std::pair<T, Parent>> layer;
        for (int x : frontier)
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                T y = mul((*elems)[static_cast<std::size_t>(x)], gens[gi].second);
                if (!index->count(y))
                    layer.emplace_back(std::move(y), Parent{x, static_cast<int>(gi)});
            }
        std::sort(layer.begin(), layer.end(), [&](const auto& a, const auto& b) {
            if (less(a.first, b.first)) return true;
            if (less(b.first, a.first)) return false;
            // duplicate elements: deterministic parent choice
            if (a.second.prev != b.second.prev) return a.second.prev < b.second.prev;
            return a.second.gen < b.second.gen;
        });
        frontier.clear();
        for (auto& [y, par] : layer) {
            auto [idx, fresh] = intern(y);
            if (!fresh) continue;
            parents[static_cast<std::size_t>(idx)] = par;
            frontier.push_back(idx);
            if (elems->size() > cap)
                throw ResourceError("FiniteGroup::build: order exceeds cap");
        }
    }

    FiniteGroup g;
    g.order_ = elems->size();
    g.mul_ = [elems, index, mul](int a, int b) {
        return index->at(mul((*elems)[static_cast<std::size_t>(a)],
                             (*elems)[static_cast<std::size_t>(b)]));
    };
    g.parents_ = std::move(parents);
    g.finder_ = [index](const void* x) {
        auto it = index->find(*static_cast<const T*>(x));
        return it == index->end() ? -1 : it->second;
    };
    for (auto& [name, ge] : gens) {
        g.gen_names_.push_back(name);
        g.gen_elems_.push_back(index->at(ge));
    }
    g.inv_.assign(g.order_, -1);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (g.mul_(a, b) == 0) { g.inv_[static_cast<std::size_t>(a)] = b; break; }
    if (namer)
        g.namer_ = [elems, namer](int e) { return namer((*elems)[static_cast<std::size_t>(e)]); };
    return g;
}

}  // namespace gcp
