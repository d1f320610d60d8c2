#include "gcpoly/rewrite.hpp"

#include <algorithm>
#include <sstream>

namespace gcp {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::CancelS: return "cancel-s";
        case Rule::CancelT: return "cancel-t";
        case Rule::CommuteSS: return "commute-ss";
        case Rule::CommuteTT: return "commute-tt";
        case Rule::CommuteST: return "commute-st";
        case Rule::Braid: return "braid";
        case Rule::PushT: return "push-t";
        case Rule::Collapse: return "collapse";
        case Rule::Circular: return "circular";
    }
    return "?";
}

std::string trace_to_json(const Trace& trace) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& st = trace[i];
        if (i) os << ",";
        os << "{\"rule\":\"" << rule_name(st.rule) << "\",\"position\":" << st.position
           << ",\"before\":\"" << word_to_string(st.before) << "\",\"after\":\""
           << word_to_string(st.after) << "\"}";
    }
    os << "]";
    return os.str();
}

Word EchelonWord::flatten() const {
    Word w;
    for (unsigned i = 1; i <= n; ++i) {
        const EchelonBlock& b = blocks[i - 1];
        if (b.kind == 's')
            w.push_back({'s', i, tag});
        else if (b.kind == 't')
            for (unsigned k = 0; k < b.exp; ++k) w.push_back({'t', i, tag});
    }
    return w;
}

CtKey EchelonWord::ct() const {
    Word w = flatten();
    for (auto& l : w) l.tag = 0;
    return ct_key(w, n);
}

namespace {

const Alphabet& alpha_of(const Letter& l, const Alphabet& a, const Alphabet& b) {
    return l.tag == 0 ? a : b;
}

/// Whether two adjacent letters may be swapped by an admissible commutation.
bool commutable(const Letter& x, const Letter& y) {
    if (x.tag != y.tag) return true;
    if (x.kind == 't' && y.kind == 't') return true;
    unsigned hi = std::max(x.index, y.index);
    unsigned lo = std::min(x.index, y.index);
    if (x.kind == 's' && y.kind == 's') return hi - lo > 1;
    unsigned i = (x.kind == 's') ? x.index : y.index;
    unsigned k = (x.kind == 's') ? y.index : x.index;
    return k + 1 <= i || k >= i + 2;
}

Rule commute_rule(const Letter& x, const Letter& y) {
    if (x.kind == 's' && y.kind == 's') return Rule::CommuteSS;
    if (x.kind == 't' && y.kind == 't') return Rule::CommuteTT;
    return Rule::CommuteST;
}

[[noreturn]] void rule_fail(Rule rule, std::size_t pos, const std::string& expected) {
    throw RuleApplicationError(std::string(rule_name(rule)) + " at position " +
                               std::to_string(pos) + ": expected " + expected);
}

}  // namespace

Word apply_transformation(const Word& w, Rule rule, std::size_t pos,
                          const Alphabet& a, const Alphabet& b) {
    Word out = w;
    switch (rule) {
        case Rule::CancelS: {
            if (pos + 1 >= w.size() || w[pos].kind != 's' || w[pos] != w[pos + 1])
                rule_fail(rule, pos, "s_i s_i");
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos),
                      out.begin() + static_cast<std::ptrdiff_t>(pos + 2));
            return out;
        }
        case Rule::CancelT: {
            if (pos >= w.size() || w[pos].kind != 't') rule_fail(rule, pos, "t_i^r");
            unsigned r = alpha_of(w[pos], a, b).r;
            if (pos + r > w.size()) rule_fail(rule, pos, "t_i^r");
            for (unsigned k = 1; k < r; ++k)
                if (w[pos + k] != w[pos]) rule_fail(rule, pos, "t_i^r");
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos),
                      out.begin() + static_cast<std::ptrdiff_t>(pos + r));
            return out;
        }
        case Rule::CommuteSS:
        case Rule::CommuteTT:
        case Rule::CommuteST: {
            if (pos + 1 >= w.size()) rule_fail(rule, pos, "two adjacent letters");
            const Letter& x = w[pos];
            const Letter& y = w[pos + 1];
            bool kinds_ok =
                (rule == Rule::CommuteSS && x.kind == 's' && y.kind == 's') ||
                (rule == Rule::CommuteTT && x.kind == 't' && y.kind == 't') ||
                (rule == Rule::CommuteST && x.kind != y.kind);
            if (!kinds_ok || !commutable(x, y))
                rule_fail(rule, pos, "a commuting pair");
            std::swap(out[pos], out[pos + 1]);
            return out;
        }
        case Rule::Braid: {
            if (pos + 2 >= w.size()) rule_fail(rule, pos, "s_i s_{i+1} s_i");
            const Letter& x = w[pos];
            if (x.kind != 's' || w[pos + 1].kind != 's' || w[pos + 2] != x ||
                w[pos + 1].tag != x.tag || w[pos + 1].index != x.index + 1)
                rule_fail(rule, pos, "s_i s_{i+1} s_i");
            std::swap(out[pos], out[pos + 1]);
            out[pos + 2] = out[pos];
            return out;
        }
        case Rule::PushT: {
            if (pos + 1 >= w.size()) rule_fail(rule, pos, "s_i t_i or t_i s_i");
            Letter x = w[pos];
            Letter y = w[pos + 1];
            if (x.tag != y.tag || x.kind == y.kind || x.index != y.index)
                rule_fail(rule, pos, "s_i t_i or t_i s_i");
            // s_i t_i -> t_{i+1} s_i; t_i s_i -> s_i t_{i+1}
            Letter& t = (x.kind == 't') ? x : y;
            ++t.index;
            out[pos] = y;
            out[pos + 1] = x;
            return out;
        }
        case Rule::Collapse: {
            if (pos >= w.size() || w[pos].kind != 's')
                rule_fail(rule, pos, "s_i t_{i+1}^k s_i");
            const Letter s = w[pos];
            Letter t{'t', s.index + 1, s.tag};
            std::size_t k = 0;
            while (pos + 1 + k < w.size() && w[pos + 1 + k] == t) ++k;
            if (k == 0 || pos + 1 + k >= w.size() || w[pos + 1 + k] != s)
                rule_fail(rule, pos, "s_i t_{i+1}^k s_i with k >= 1");
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos),
                      out.begin() + static_cast<std::ptrdiff_t>(pos + k + 2));
            Letter ti{'t', s.index, s.tag};
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), k, ti);
            return out;
        }
        case Rule::Circular: {
            if (pos > w.size()) rule_fail(rule, pos, "a split point within the word");
            std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(pos),
                        out.end());
            return out;
        }
    }
    rule_fail(rule, pos, "a known rule");
}

std::optional<EchelonWord> is_echelon(const Word& w, const Alphabet& alpha,
                                      unsigned tag) {
    EchelonWord e;
    e.n = alpha.n;
    e.r = alpha.r;
    e.tag = tag;
    e.blocks.assign(alpha.n, EchelonBlock{});
    unsigned min_next = 1;  // blocks must appear with strictly increasing index
    std::size_t j = 0;
    while (j < w.size()) {
        const Letter& l = w[j];
        if (l.tag != tag || l.index < min_next || l.index > alpha.n) return std::nullopt;
        if (l.kind == 's') {
            if (l.index >= alpha.n) return std::nullopt;
            e.blocks[l.index - 1] = {'s', 0};
            ++j;
        } else {
            unsigned exp = 0;
            while (j < w.size() && w[j] == l) { ++exp; ++j; }
            if (exp >= alpha.r) return std::nullopt;
            e.blocks[l.index - 1] = {'t', exp};
        }
        min_next = l.index + 1;
    }
    return e;
}

namespace {

/// Mutable word with a recorded trace and a hard step budget.
struct Rewriter {
    Word w;
    Trace trace;
    Alphabet A;
    Alphabet B;
    std::size_t budget;

    void apply(Rule rule, std::size_t pos) {
        if (trace.size() >= budget) throw StepBudgetError(std::move(trace));
        Word before = w;
        w = apply_transformation(w, rule, pos, A, B);
        trace.push_back({rule, pos, std::move(before), w});
    }

    void commute_adjacent(std::size_t pos) {
        apply(commute_rule(w[pos], w[pos + 1]), pos);
    }

    /// Moves the letter at `pos` left to `target` through adjacent commutations.
    void move_left(std::size_t pos, std::size_t target) {
        for (std::size_t j = pos; j > target; --j) commute_adjacent(j - 1);
    }

    /// Moves the letter at `pos` right to `target`.
    void move_right(std::size_t pos, std::size_t target) {
        for (std::size_t j = pos; j < target; ++j) commute_adjacent(j);
    }

    /// Moves the block [pos, pos+len) left by `count` positions.
    std::size_t block_left(std::size_t pos, std::size_t len, std::size_t count) {
        for (std::size_t c = 0; c < count; ++c) {
            move_right(pos - 1, pos + len - 1);
            --pos;
        }
        return pos;
    }
};

struct Unit {
    std::size_t start;
    std::size_t len;
    bool is_s;
};

/// Maximal index-i units inside [lo, hi): a single s_i, or a maximal t_i run.
std::vector<Unit> find_units(const Word& w, std::size_t lo, std::size_t hi,
                             unsigned i, unsigned tag) {
    std::vector<Unit> us;
    std::size_t j = lo;
    while (j < hi) {
        const Letter& l = w[j];
        if (l.tag == tag && l.index == i) {
            if (l.kind == 's') {
                us.push_back({j, 1, true});
                ++j;
            } else {
                std::size_t k = j;
                while (k < hi && w[k] == l) ++k;
                us.push_back({j, k - j, false});
                j = k;
            }
        } else {
            ++j;
        }
    }
    return us;
}

/// Merges the index-i units of [lo, hi) down to at most one and normalizes a
/// surviving t-run below exponent r. Letters in the region must have index
/// >= i. Returns the new hi (cancellations shorten the word).
std::size_t merge_units(Rewriter& rw, std::size_t lo, std::size_t hi, unsigned i,
                        unsigned tag) {
    const Alphabet& A = (tag == 0) ? rw.A : rw.B;
    if (i > A.n) return hi;
    for (;;) {
        auto units = find_units(rw.w, lo, hi, i, tag);

        bool normalized = false;
        for (const Unit& u : units)
            if (!u.is_s && u.len >= A.r) {
                rw.apply(Rule::CancelT, u.start);
                hi -= A.r;
                normalized = true;
                break;
            }
        if (normalized) continue;
        if (units.size() <= 1) break;

        Unit U1 = units[0];
        Unit U2 = units[1];

        // clear the gap down to at most one index-(i+1) unit; rescan if that
        // moved anything, since positions may have shifted
        std::size_t old_size = rw.w.size();
        std::size_t old_steps = rw.trace.size();
        merge_units(rw, U1.start + U1.len, U2.start, i + 1, tag);
        hi -= old_size - rw.w.size();
        if (rw.trace.size() != old_steps) continue;

        // slide U1 right, one crossed letter per pass; everything crossed has
        // index >= i+2 or a foreign tag, so these are all commutations
        std::size_t after1 = U1.start + U1.len;
        const Letter nxt = rw.w[after1];
        if (!(nxt.tag == tag && (nxt.index == i || nxt.index == i + 1))) {
            rw.move_left(after1, U1.start);
            continue;
        }

        std::size_t mid_len = 0;
        if (nxt.index == i + 1) {
            if (nxt.kind == 's') {
                mid_len = 1;
            } else {
                std::size_t k = after1;
                while (k < hi && rw.w[k] == nxt) ++k;
                mid_len = k - after1;
            }
            if (after1 + mid_len < U2.start) {
                // slide U2 left toward the separating unit
                rw.move_right(U2.start - 1, U2.start + U2.len - 1);
                continue;
            }
        }

        if (mid_len > 0) {
            // an index-(i+1) unit separates U1 and U2; a t-run neighbor
            // commutes past it, two s_i need braid or collapse
            if (!U1.is_s) {
                rw.block_left(after1, mid_len, U1.len);
            } else if (!U2.is_s) {
                rw.block_left(U2.start, U2.len, mid_len);
            } else if (nxt.kind == 's') {
                rw.apply(Rule::Braid, U1.start);
            } else {
                rw.apply(Rule::Collapse, U1.start);
                hi -= 2;
            }
            continue;
        }

        // contiguous U1 U2; equal adjacent t-runs cannot occur here since the
        // scan would have merged them into one unit
        if (U1.is_s && U2.is_s) {
            rw.apply(Rule::CancelS, U1.start);
            hi -= 2;
        } else if (U1.is_s) {
            for (std::size_t j = 0; j < U2.len; ++j) rw.apply(Rule::PushT, U1.start + j);
        } else {
            for (std::size_t j = 0; j < U1.len; ++j)
                rw.apply(Rule::PushT, U1.start + U1.len - 1 - j);
        }
    }
    return hi;
}

/// Echelonizes the region [region_lo, region_lo + region_len) of rw.w over the
/// tagged alphabet. Everything left of the region must commute with the
/// region's letters (echelon prefixes and foreign-tag material), everything
/// right of it must be foreign-tag. Returns the new region length.
std::size_t echelonize_region(Rewriter& rw, std::size_t region_lo,
                              std::size_t region_len, unsigned tag) {
    const Alphabet& A = (tag == 0) ? rw.A : rw.B;
    std::size_t prefix = 0;
    for (unsigned i = 1; i <= A.n; ++i) {
        std::size_t lo = region_lo + prefix;
        std::size_t old_size = rw.w.size();
        merge_units(rw, lo, region_lo + region_len, i, tag);
        region_len -= old_size - rw.w.size();

        auto units = find_units(rw.w, lo, region_lo + region_len, i, tag);
        if (units.empty()) continue;
        Unit D = units[0];
        if (D.start == lo) {
            prefix += D.len;
            continue;
        }
        // w = P u D u' Q with u = [lo, D.start); pull u to the front, rotate
        // once, then return it behind u'. All slides are commutations: u has
        // index > i against P's smaller indices, Q is foreign-tag.
        std::size_t u_len = D.start - lo;
        rw.block_left(lo, u_len, lo);
        rw.apply(Rule::Circular, u_len);
        std::size_t q_len = rw.w.size() - (region_lo + region_len);
        rw.block_left(rw.w.size() - u_len, u_len, q_len);
        prefix += D.len;
    }
    return region_len;
}

std::size_t word_budget(const Word& w) { return 50 * w.size() * w.size(); }

void check_word_alphabet(const Word& w, const Alphabet& a, unsigned tag,
                         std::size_t length_cap) {
    if (w.size() > length_cap) throw ResourceError("echelonize: word exceeds length cap");
    for (const auto& l : w) {
        if (l.tag != tag) continue;
        if (l.kind == 's' && (l.index < 1 || l.index + 1 > a.n))
            throw DomainError("echelonize: s-index out of range");
        if (l.kind == 't' && (l.index < 1 || l.index > a.n))
            throw DomainError("echelonize: t-index out of range");
    }
}

}  // namespace

EchelonizeResult echelonize(const Word& w, const GroupDescriptor& desc,
                            std::size_t length_cap) {
    Alphabet a{desc.n, desc.r};
    check_word_alphabet(w, a, 0, length_cap);
    for (const auto& l : w)
        if (l.tag != 0) throw DomainError("echelonize: primed letter outside product context");
    Rewriter rw{w, {}, a, {0, 1}, word_budget(w)};
    echelonize_region(rw, 0, rw.w.size(), 0);
    auto e = is_echelon(rw.w, a);
    if (!e) throw RuleApplicationError("echelonize: result is not in echelon form");
    return {*e, std::move(rw.trace)};
}

EchelonWord ct_recover(const CtKey& key, const GroupDescriptor& desc) {
    if (key.size() != 2 * static_cast<std::size_t>(desc.n) - 1)
        throw DomainError("ct_recover: key length does not match n");
    EchelonWord e;
    e.n = desc.n;
    e.r = desc.r;
    e.blocks.assign(desc.n, EchelonBlock{});
    unsigned used = 0;
    for (unsigned i = 1; i < desc.n; ++i) {
        unsigned ai = key[2 * i - 1];
        unsigned bi = key[2 * i];
        if (ai > 1) throw DomainError("ct_recover: a_i must be 0 or 1");
        if (ai > 0 && bi > 0)
            throw DomainError("ct_recover: block " + std::to_string(i) +
                              " cannot hold both s and t letters");
        if (bi >= desc.r) throw DomainError("ct_recover: b_i exceeds r-1");
        if (ai) e.blocks[i - 1] = {'s', 0};
        if (bi) e.blocks[i - 1] = {'t', bi};
        used += ai + bi;
    }
    if (key[0] < used) throw DomainError("ct_recover: length smaller than the letter counts");
    unsigned bn = key[0] - used;
    if (bn >= desc.r) throw DomainError("ct_recover: implied b_n exceeds r-1");
    if (bn) e.blocks[desc.n - 1] = {'t', bn};
    return e;
}

Word separation_form(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const auto& l : w)
        if (l.tag == 0) out.push_back(l);
    for (const auto& l : w)
        if (l.tag != 0) out.push_back(l);
    return out;
}

ProductEchelonResult echelonize_product(const Word& w, const GroupDescriptor& d1,
                                        const GroupDescriptor& d2,
                                        std::size_t length_cap) {
    Alphabet a{d1.n, d1.r};
    Alphabet b{d2.n, d2.r};
    check_word_alphabet(w, a, 0, length_cap);
    check_word_alphabet(w, b, 1, length_cap);
    for (const auto& l : w)
        if (l.tag > 1) throw DomainError("echelonize_product: unknown factor tag");
    Rewriter rw{w, {}, a, b, word_budget(w)};

    // stable separation by adjacent cross-factor commutations
    for (;;) {
        bool swapped = false;
        for (std::size_t j = 0; j + 1 < rw.w.size(); ++j)
            if (rw.w[j].tag == 1 && rw.w[j + 1].tag == 0) {
                rw.commute_adjacent(j);
                swapped = true;
            }
        if (!swapped) break;
    }

    std::size_t len1 = 0;
    while (len1 < rw.w.size() && rw.w[len1].tag == 0) ++len1;
    len1 = echelonize_region(rw, 0, len1, 0);
    echelonize_region(rw, len1, rw.w.size() - len1, 1);

    Word w1(rw.w.begin(), rw.w.begin() + static_cast<std::ptrdiff_t>(len1));
    Word w2(rw.w.begin() + static_cast<std::ptrdiff_t>(len1), rw.w.end());
    auto e1 = is_echelon(w1, a, 0);
    auto e2 = is_echelon(w2, b, 1);
    if (!e1 || !e2)
        throw RuleApplicationError("echelonize_product: result is not in echelon form");
    return {*e1, *e2, std::move(rw.trace)};
}

CtKey product_ct_key(const Word& w, unsigned n1, unsigned n2) {
    CtKey key;
    key.push_back(static_cast<unsigned>(w.size()));
    Signature s1 = signature_tagged(w, n1, 0);
    for (unsigned v : s1) key.push_back(v);  // keeps b_{n1}
    Signature s2 = signature_tagged(w, n2, 1);
    for (std::size_t i = 0; i + 1 < s2.size(); ++i) key.push_back(s2[i]);  // drops b_{n2}
    return key;
}

}  // namespace gcp
