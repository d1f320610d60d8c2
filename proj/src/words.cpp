#include "gcpoly/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gcp {

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << w[i].name();
    }
    return os.str();
}

Word parse_word(const std::string& text, unsigned n, unsigned n_primed) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        std::size_t tok_start = i;
        char kind = text[i];
        if (kind != 's' && kind != 't')
            throw ParseError("unknown token '" + std::string(1, kind) + "'", tok_start);
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected generator index", i);
        unsigned idx = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            idx = idx * 10 + static_cast<unsigned>(text[i++] - '0');
        unsigned tag = 0;
        while (i < text.size() && text[i] == '\'') { ++tag; ++i; }
        unsigned rep = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected exponent after '^'", i);
            rep = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                rep = rep * 10 + static_cast<unsigned>(text[i++] - '0');
            if (rep == 0) throw ParseError("exponent must be >= 1", tok_start);
        }
        unsigned alphabet_n = (tag == 0) ? n : n_primed;
        if (tag > 1 || (tag == 1 && n_primed == 0))
            throw ParseError("primed letters not allowed here", tok_start);
        if (kind == 's' && (idx < 1 || idx > alphabet_n - 1))
            throw ParseError("s-index out of range", tok_start);
        if (kind == 't' && (idx < 1 || idx > alphabet_n))
            throw ParseError("t-index out of range", tok_start);
        for (unsigned k = 0; k < rep; ++k) w.push_back({kind, idx, tag});
    }
    return w;
}

Signature signature(const Word& w, unsigned n) { return signature_tagged(w, n, 0); }

Signature signature_tagged(const Word& w, unsigned n, unsigned tag) {
    Signature sig(2 * n - 1, 0);
    for (const auto& l : w) {
        if (l.tag != tag) continue;
        if (l.kind == 's')
            ++sig[2 * (l.index - 1)];
        else if (l.index < n)
            ++sig[2 * (l.index - 1) + 1];
        else
            ++sig[2 * n - 2];
    }
    return sig;
}

CtKey ct_key(const Word& w, unsigned n) {
    Signature sig = signature(w, n);
    CtKey key;
    key.reserve(2 * n - 1);
    key.push_back(static_cast<unsigned>(w.size()));
    for (unsigned i = 0; i + 1 < sig.size(); ++i) key.push_back(sig[i]);
    return key;
}

Ordering lex_compare(const CtKey& x, const CtKey& y) {
    if (x.size() != y.size()) throw DomainError("lex_compare: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < y[i]) return Ordering::LT;
        if (x[i] > y[i]) return Ordering::GT;
    }
    return Ordering::EQ;
}

GroupElem evaluate_word(const Word& w, const GroupDescriptor& desc) {
    GroupElem acc = identity_elem(desc.r, desc.n);
    for (const auto& l : w) {
        if (l.tag != 0) throw DomainError("evaluate_word: primed letter outside product context");
        acc = elem_mul(acc, monomial_from_generator({l.kind, l.index}, desc));
    }
    return acc;
}

std::uint64_t multinomial(const Signature& alpha) {
    std::uint64_t total = 0;
    for (auto a : alpha) total += a;
    std::uint64_t result = 1;
    std::uint64_t k = 0;
    for (auto a : alpha)
        for (unsigned j = 1; j <= a; ++j)
            result = result * (++k) / j;  // exact: binomial prefix products divide
    (void)total;
    return result;
}

std::vector<Word> enumerate_words(const Signature& alpha, unsigned n,
                                  std::size_t length_cap) {
    if (alpha.size() != 2 * n - 1)
        throw DomainError("enumerate_words: signature length does not match n");
    std::size_t len = 0;
    for (auto a : alpha) len += a;
    if (len > length_cap) throw ResourceError("enumerate_words: |alpha| exceeds cap");

    Word base;
    for (unsigned i = 1; i < n; ++i)
        for (unsigned k = 0; k < alpha[2 * (i - 1)]; ++k) base.push_back({'s', i, 0});
    for (unsigned i = 1; i < n; ++i)
        for (unsigned k = 0; k < alpha[2 * (i - 1) + 1]; ++k) base.push_back({'t', i, 0});
    for (unsigned k = 0; k < alpha[2 * n - 2]; ++k) base.push_back({'t', n, 0});
    std::sort(base.begin(), base.end());

    std::vector<Word> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

}  // namespace gcp
