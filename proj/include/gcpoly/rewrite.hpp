#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcpoly/words.hpp"

namespace gcp {

/// Generator alphabet bounds for one factor: indices 1..n, exponents mod r.
struct Alphabet {
    unsigned n;
    unsigned r;
};

enum class Rule {
    CancelS,    // w' s_i s_i w''            -> w' w''
    CancelT,    // w' t_i^r w''              -> w' w''
    CommuteSS,  // w' s_i s_j w''            -> w' s_j s_i w''   (|i-j| > 1)
    CommuteTT,  // w' t_i t_j w''            -> w' t_j t_i w''
    CommuteST,  // w' s_i t_k w''           <-> w' t_k s_i w''   (k <= i-1 or k >= i+2)
    Braid,      // w' s_i s_{i+1} s_i w''    -> w' s_{i+1} s_i s_{i+1} w''
    PushT,      // w' s_i t_i w''            -> w' t_{i+1} s_i w''   (and t_i s_i -> s_i t_{i+1})
    Collapse,   // w' s_i t_{i+1}^k s_i w''  -> w' t_i^k w''
    Circular,   // u v -> v u, position = |u|
};

const char* rule_name(Rule r);

struct RewriteStep {
    Rule rule;
    std::size_t position;
    Word before;
    Word after;
};

using Trace = std::vector<RewriteStep>;

std::string trace_to_json(const Trace& trace);

/// One block of an echelon word: 1, s_i, or t_i^exp with 1 <= exp <= r-1.
struct EchelonBlock {
    char kind = '1';  // '1', 's' or 't'
    unsigned exp = 0;
    bool operator==(const EchelonBlock&) const = default;
};

struct EchelonWord {
    unsigned n = 0;
    unsigned r = 1;
    unsigned tag = 0;
    std::vector<EchelonBlock> blocks;  // one per index 1..n

    Word flatten() const;
    CtKey ct() const;
    bool operator==(const EchelonWord&) const = default;
};

/// Applies one admissible transformation at `position`. Letters of different
/// factor tags always commute. Throws RuleApplicationError when the rule's
/// left-hand pattern does not match.
Word apply_transformation(const Word& w, Rule rule, std::size_t position,
                          const Alphabet& a, const Alphabet& b = {0, 1});

/// Block decomposition when w = delta_1 ... delta_n over the tagged alphabet.
std::optional<EchelonWord> is_echelon(const Word& w, const Alphabet& alpha,
                                      unsigned tag = 0);

struct EchelonizeResult {
    EchelonWord echelon;
    Trace trace;
};

/// Raised when the echelonization step budget is exhausted; indicates a bug
/// in the strategy, never expected on valid inputs.
struct StepBudgetError : ResourceError {
    Trace partial;
    explicit StepBudgetError(Trace t)
        : ResourceError("echelonize: step budget exceeded after " +
                        std::to_string(t.size()) + " steps"),
          partial(std::move(t)) {}
};

/// Deterministic echelonization: recursion on the smallest letter index with
/// an inner induction on the index-i letter count, one circular move per
/// index stage. Step budget 50*|w|^2; exceeding it raises ResourceError with
/// the partial trace attached to the message.
EchelonizeResult echelonize(const Word& w, const GroupDescriptor& desc,
                            std::size_t length_cap = 64);

/// Unique echelon word with the given ct-key, or DomainError when no echelon
/// word realizes it.
EchelonWord ct_recover(const CtKey& key, const GroupDescriptor& desc);

/// Stable reorder: factor-0 letters first, factor-1 letters after, relative
/// order within each factor preserved.
Word separation_form(const Word& w);

struct ProductEchelonResult {
    EchelonWord first;
    EchelonWord second;
    Trace trace;
};

/// Separation followed by per-factor echelonization, all through admissible
/// transformations on the full word.
ProductEchelonResult echelonize_product(const Word& w, const GroupDescriptor& d1,
                                        const GroupDescriptor& d2,
                                        std::size_t length_cap = 64);

/// Combined ct-key of a product word: (|w|, sig_S with b_{n1}, sig_T without b_{n2}).
CtKey product_ct_key(const Word& w, unsigned n1, unsigned n2);

}  // namespace gcp
