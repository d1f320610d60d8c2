#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcpoly/multipoly.hpp"
#include "gcpoly/reps.hpp"
#include "gcpoly/words.hpp"

namespace gcp {

/// Multiparameter pencil x_0 I + x_1 rho(g_1) + ... over an ordered
/// generating set, given by element ids in the rep's group. x_0 is present
/// iff include_identity. The rep must outlive the pencil.
struct Pencil {
    const Rep* rep = nullptr;
    std::vector<int> gens;
    bool include_identity = true;

    unsigned nvars() const {
        return static_cast<unsigned>(gens.size()) + (include_identity ? 1 : 0);
    }
};

/// Pencil over the rep's own generator list.
Pencil make_pencil(const Rep& rep, bool include_identity = true);
Pencil make_pencil(const Rep& rep, std::vector<int> gen_set,
                   bool include_identity = true);

/// The pencil as a matrix of degree-1 forms (exact reps only).
Mat<MultiPoly> pencil_matrix(const Pencil& p);

/// Exact characteristic polynomial by fraction-free elimination.
/// Throws ResourceError above the dimension cap, directing callers to
/// charpoly_equal.
MultiPoly det_exact(const Pencil& p, unsigned dim_cap = 8);

/// Cofactor-expansion determinant, the small-dimension cross-check oracle.
MultiPoly det_cofactor(const Mat<MultiPoly>& m);

struct PitVerdict {
    bool equal = false;
    std::uint64_t prime = 0;
    unsigned trials = 0;
    double bound = 0.0;  // Schwartz-Zippel failure probability when equal
    std::vector<std::uint64_t> witness;  // point separating the determinants
    std::string note;

    std::string to_json() const;
};

/// Randomized equality of det(x_0 I + sum x_k rho(g_k)) for two exact reps
/// over the same group and generating set, by evaluation at uniform points of
/// F_p with p = 1 (mod r), p > 2^31.
PitVerdict charpoly_equal(const Rep& a, const Rep& b,
                          const std::vector<int>& gen_set, unsigned trials,
                          std::uint64_t seed);

enum class SigSumMethod { Brute, Coefficient };

/// Sum of chi_rho over all words with the given signature: brute enumerates
/// the words (|alpha| capped), coefficient extracts the x^alpha term of
/// Tr((sum_k x_k rho(g_k))^{|alpha|}) with truncated symbolic powering.
CycNum signature_sum(const Rep& rep, const Signature& alpha, unsigned n,
                     SigSumMethod method, std::size_t weight_cap = 6);

struct FrobeniusReport {
    bool pass = false;
    double max_rel_err = 0.0;
    unsigned points = 0;
    std::string detail;
};

/// Compares the regular-rep pencil determinant with the product of the
/// constituents' determinants raised to their multiplicities, at random
/// complex points.
FrobeniusReport frobenius_check(const GroupPtr& g, std::uint64_t seed,
                                double tol = 1e-6, unsigned points = 20);

}  // namespace gcp
