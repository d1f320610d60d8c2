#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gcpoly/cyclotomic.hpp"
#include "gcpoly/finite_group.hpp"
#include "gcpoly/matrix.hpp"

namespace gcp {

using GroupPtr = std::shared_ptr<const FiniteGroup>;
using ExactMat = Mat<CycNum>;
using NumMat = Eigen::MatrixXcd;

GroupPtr shared_group(FiniteGroup g);

/// Monomial matrix of a group element over Q(zeta_r): column i carries
/// zeta^{phases[i]} in row perm[i].
ExactMat monomial_matrix(const GroupElem& e, const FieldPtr& f);

/// Finite-dimensional representation, stored as one matrix per group element
/// (eager extension of the generator images along BFS words). A Rep built
/// from non-homomorphic generator images is representable but fails
/// check_representation.
class Rep {
public:
    enum class Kind { Exact, Floating };

    Rep() = default;
    static Rep exact(GroupPtr g, FieldPtr f, std::vector<ExactMat> gen_images);
    static Rep floating(GroupPtr g, std::vector<NumMat> gen_images);

    Kind kind() const { return kind_; }
    unsigned dim() const { return dim_; }
    const GroupPtr& group() const { return group_; }
    const FieldPtr& field() const { return field_; }

    const ExactMat& exact_image(int e) const;
    /// Floating image; converts entrywise for exact reps.
    NumMat numeric_image(int e) const;

    std::string to_json() const;

private:
    Kind kind_ = Kind::Exact;
    unsigned dim_ = 0;
    GroupPtr group_;
    FieldPtr field_;
    std::vector<ExactMat> exact_;
    std::vector<NumMat> num_;
};

struct RepCheck {
    bool pass = false;
    double max_residual = 0.0;
    std::string detail;
};

/// Homomorphism check over the whole multiplication action of the generators:
/// rho(h) rho(g) = rho(hg) for every element h and generator g. Exact reps
/// must satisfy it exactly, floating reps within tol.
RepCheck check_representation(const Rep& rep, double tol = 1e-9);

/// Class function of a representation; `exact` is filled for exact reps only,
/// `numeric` always. Values are indexed by conjugacy class id.
struct ClassFunction {
    std::vector<CycNum> exact;
    std::vector<std::complex<double>> numeric;
};

ClassFunction character(const Rep& rep);

/// True iff the characters agree on every class: exact equality when both
/// reps are exact, componentwise within tol otherwise.
bool equivalent_p(const Rep& a, const Rep& b, double tol = 1e-6);

/// Natural n-dimensional monomial representation of G(r,1,n).
Rep reflection_rep(unsigned r, unsigned n, GroupPtr g = nullptr);

/// The 2r one-dimensional characters of G(r,1,n): s_i -> eps, t_i -> zeta^k.
std::vector<Rep> one_dim_characters(unsigned r, unsigned n, GroupPtr g = nullptr);

enum class CombineOp { Tensor, DirectSum, Dual };

Rep rep_combine(CombineOp op, const Rep& a, const Rep* b = nullptr);

/// Entrywise field automorphism zeta -> zeta^j; requires gcd(j, r) = 1.
Rep galois_twist(const Rep& rep, long j);

/// Left regular representation by permutation matrices.
Rep regular_rep(GroupPtr g, FieldPtr f, std::size_t cap = 200);

/// X^{-1} rho X for an invertible exact matrix.
Rep conjugated(const Rep& rep, const ExactMat& x);

ExactMat gauss_inverse(const ExactMat& m);

struct Constituent {
    Rep rep;  // floating, numerically irreducible
    unsigned multiplicity = 0;
};

/// Numeric decomposition of the regular representation: seeded random
/// Hermitian commutant averaging, eigenspace splitting, constituents
/// deduplicated by character and sorted by (dim, character fingerprint).
/// Deterministic given the seed.
std::vector<Constituent> decompose_regular(const GroupPtr& g, std::uint64_t seed,
                                           double tol = 1e-9,
                                           std::size_t cap = 200);

}  // namespace gcp
