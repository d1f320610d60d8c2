#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gcpoly/reps.hpp"

namespace gcp {

using QVec = std::vector<Rational>;

Rational dot(const QVec& a, const QVec& b);

/// s_{alpha,k}(v) = v - (<v,alpha> - k) * 2 alpha / <alpha,alpha>.
/// Reflects across the affine hyperplane <x,alpha> = k; k = 0 gives the
/// linear reflection.
QVec affine_reflection(const QVec& alpha, long k, const QVec& v);

struct RootSystem {
    std::string name;
    std::vector<QVec> roots;    // all roots
    std::vector<QVec> simple;   // simple roots
    QVec highest;               // highest root
};

/// Presets "A1", "A2", "B2" with exact rational coordinates.
RootSystem root_system(const std::string& name);

/// Element of H ltimes (Z/m)^k: an H element id paired with the translation
/// vector.
using SDElem = std::pair<int, std::vector<unsigned>>;

/// G = H ltimes N with N = (Z/mZ)^k. Multiplication:
/// (h1,v1)(h2,v2) = (h1 h2, action(h2)^{-1} v1 + v2).
struct SemidirectGroup {
    GroupPtr h;
    unsigned m = 2;
    unsigned k = 1;
    /// k x k row-major action matrix mod m, one per H element.
    std::vector<std::vector<unsigned>> act;
    GroupPtr group;  // the full group; generators: H's, then n_1..n_k

    std::vector<unsigned> apply_action(int h_elem, const std::vector<unsigned>& v) const;
    /// Full-group element id of a concrete (h, v) pair.
    int locate(int h_elem, const std::vector<unsigned>& v) const;
    std::string to_json() const;
};

/// Builds the full group; `gen_action` holds one invertible k x k matrix
/// mod m per H generator. Throws DomainError when the action fails to respect
/// a relation of H or a matrix is singular mod m.
SemidirectGroup make_semidirect(GroupPtr h, unsigned m, unsigned k,
                                const std::vector<std::vector<unsigned>>& gen_action,
                                std::size_t cap = 20000);

/// Finite quotient W ltimes (T/mT) of an affine Coxeter group for the preset
/// root systems.
SemidirectGroup affine_quotient(const std::string& roots, unsigned m,
                                std::size_t cap = 20000);

/// One representative per conjugacy class: the least element id of each
/// class. Contains the identity.
std::vector<int> conjugacy_reps(const FiniteGroup& h);

/// The 2^num_gens products delta_1...delta_n with delta_i in {1, s_i}, as
/// permutations on num_gens + 1 points.
std::vector<GroupElem> an_cover_set(unsigned num_gens);

enum class GenSetVariant { Full, NoIdentity, NoInverses };

/// Ordered generating set of the full group: H class representatives, the
/// lattice translations n_i, and their inverses; duplicates removed keeping
/// first occurrence.
std::vector<int> theorem44_gen_set(const SemidirectGroup& g, GenSetVariant variant);

struct DiagonalGenerators {
    std::vector<GroupElem> ys;
    /// Exponents e with y = prod y_i^{e_i} (mod r), for a diagonal element of
    /// A(r,p,n). Throws DomainError when y is not in the subgroup.
    std::vector<unsigned> decompose(const GroupElem& y) const;

    unsigned r = 1, p = 1, n = 1;
};

/// y_1 = diag(zeta^p, 1, ..., 1), y_i = diag with (zeta^{-1}, zeta) at
/// positions (i-1, i): the diagonal subgroup A(r,p,n) and the exponent
/// decomposition of its elements.
DiagonalGenerators gr_pn_generators(unsigned r, unsigned p, unsigned n);

/// Representation family of a semidirect group: the trivial character, the
/// pullback of H's regular representation, monomial representations induced
/// from characters of N (deduplicated by character), and the regular
/// representation.
std::vector<Rep> quotient_rep_family(const SemidirectGroup& g, std::size_t cap = 200);

}  // namespace gcp
