#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gcpoly/group.hpp"

namespace gcp {

/// Letter of the (possibly product) imprimitive alphabet. `tag` distinguishes
/// the factors of a product group: 0 for S, 1 for the primed alphabet T.
struct Letter {
    char kind;          // 's' or 't'
    unsigned index;     // 1-based
    unsigned tag = 0;

    auto operator<=>(const Letter&) const = default;
    std::string name() const {
        std::string s(1, kind);
        s += std::to_string(index);
        for (unsigned i = 0; i < tag; ++i) s += '\'';
        return s;
    }
};

using Word = std::vector<Letter>;

std::string word_to_string(const Word& w);

/// Signature counts (a_1, b_1, ..., a_{n-1}, b_{n-1}, b_n) over N^{2n-1}.
using Signature = std::vector<unsigned>;

/// (|u|, a_1, b_1, ..., a_{n-1}, b_{n-1}) — the signature with b_n dropped
/// and the word length prefixed.
using CtKey = std::vector<unsigned>;

enum class Ordering { LT, EQ, GT };

/// Grammar: whitespace-separated tokens s<i>, t<i>, optional ^<k> with k >= 1.
/// A trailing ' selects the second factor of a product alphabet when
/// `n_primed` > 0. Throws ParseError with the byte position.
Word parse_word(const std::string& text, unsigned n, unsigned n_primed = 0);

Signature signature(const Word& w, unsigned n);
/// Signature of the second-factor letters of a product word.
Signature signature_tagged(const Word& w, unsigned n, unsigned tag);

CtKey ct_key(const Word& w, unsigned n);
Ordering lex_compare(const CtKey& x, const CtKey& y);

GroupElem evaluate_word(const Word& w, const GroupDescriptor& desc);

/// All words with the given signature in lexicographic letter order.
/// Count is the multinomial coefficient |alpha|! / prod(component!).
std::vector<Word> enumerate_words(const Signature& alpha, unsigned n,
                                  std::size_t length_cap = 10);

std::uint64_t multinomial(const Signature& alpha);

}  // namespace gcp
