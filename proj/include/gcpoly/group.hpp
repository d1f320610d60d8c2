#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gcpoly/errors.hpp"

namespace gcp {

enum class GroupKind { Imprimitive, SemidirectQuotient };

struct GroupDescriptor {
    unsigned r = 1;
    unsigned p = 1;
    unsigned n = 1;
    GroupKind kind = GroupKind::Imprimitive;

    GroupDescriptor() = default;
    GroupDescriptor(unsigned r_, unsigned p_, unsigned n_,
                    GroupKind k = GroupKind::Imprimitive);

    /// r^n n!/p
    std::uint64_t order() const;
    bool operator==(const GroupDescriptor& o) const {
        return r == o.r && p == o.p && n == o.n;
    }
    std::string to_json() const;
};

/// Monomial matrix of G(r,1,n): column i carries zeta^{phases[i]} in row perm[i].
/// perm and phases are 0-based internally; JSON uses 1-based images.
struct GroupElem {
    std::vector<unsigned> perm;    // images: i -> perm[i]
    std::vector<unsigned> phases;  // exponents mod r
    unsigned r = 1;

    bool operator==(const GroupElem& o) const {
        return r == o.r && perm == o.perm && phases == o.phases;
    }
    bool operator<(const GroupElem& o) const {
        if (perm != o.perm) return perm < o.perm;
        return phases < o.phases;
    }
    unsigned n() const { return static_cast<unsigned>(perm.size()); }
    std::string to_string() const;
    std::string to_json() const;
};

struct GroupElemHash {
    std::size_t operator()(const GroupElem& g) const;
};

GroupElem identity_elem(unsigned r, unsigned n);

/// Generator letter of the imprimitive alphabet.
struct GenLetter {
    char kind;       // 's' or 't'
    unsigned index;  // 1-based
    bool operator==(const GenLetter& o) const { return kind == o.kind && index == o.index; }
    std::string name() const { return std::string(1, kind) + std::to_string(index); }
};

/// Monomial image of s_i / t_i; t_i for i < n evaluates relation (f).
GroupElem monomial_from_generator(GenLetter gen, const GroupDescriptor& desc);

GroupElem elem_mul(const GroupElem& a, const GroupElem& b);
GroupElem elem_inv(const GroupElem& a);

/// BFS closure over the standard generators; deterministic order
/// (by word length, lexicographic on (perm, phases) within a layer).
std::vector<GroupElem> enumerate_group(const GroupDescriptor& desc,
                                       std::size_t cap = 20000);

/// BFS closure of an arbitrary generator set, same deterministic order.
std::vector<GroupElem> bfs_closure(const std::vector<GroupElem>& gens,
                                   const GroupElem& id, std::size_t cap = 20000);

/// Brute-force conjugation orbits. Input must be a full group.
std::vector<std::vector<GroupElem>> conjugacy_classes(const std::vector<GroupElem>& elements);

/// Multiset of (cycle length, phase sum mod r); conjugation invariant for p=1.
/// Pre-filter only for p > 1.
std::vector<std::pair<unsigned, unsigned>> color_cycle_invariant(const GroupElem& a);

bool is_conjugate_brute(const GroupElem& a, const GroupElem& b,
                        const std::vector<GroupElem>& group);

}  // namespace gcp
