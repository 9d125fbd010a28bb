#ifndef SYMDYN_ALPHABET_HPP
#define SYMDYN_ALPHABET_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "symdyn/errors.hpp"

namespace symdyn {

/// Ordered finite set of distinct symbol tokens. Iteration order is declaration order.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> tokens);

    int size() const { return static_cast<int>(tokens_.size()); }
    const std::string& token(int i) const { return tokens_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    /// Index of a token, or -1 when absent.
    int find(const std::string& tok) const;
    /// Index of a token; input_error when absent.
    int index_of(const std::string& tok) const;

    bool operator==(const Alphabet& o) const { return tokens_ == o.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, int> index_;
};

/// A finite word as a sequence of symbol indices into some Alphabet.
/// The empty word is valid.
using Word = std::vector<int>;

/// Parse a word from a plain string (one character per symbol; requires every
/// alphabet token to be a single character) or throw input_error.
Word parse_word(const Alphabet& a, const std::string& text);

/// Parse a word given as a token list.
Word parse_word(const Alphabet& a, const std::vector<std::string>& toks);

/// Render a word using the alphabet's tokens. Single-character alphabets
/// concatenate; otherwise tokens are space-separated.
std::string format_word(const Alphabet& a, const Word& w);

/// True iff `pat` occurs in `text` as a factor (contiguous subword).
bool contains_factor(const Word& text, const Word& pat);

/// True iff `pat` is a factor of `text` or equal to it; the empty pattern
/// occurs everywhere.
inline bool is_factor(const Word& pat, const Word& text) { return contains_factor(text, pat); }

/// KMP failure function of `pat` (pat must be nonempty).
std::vector<int> kmp_failure(const Word& pat);

/// One KMP step: current match length `state`, next symbol `c`; returns new match length.
int kmp_step(const Word& pat, const std::vector<int>& fail, int state, int c);

} // namespace symdyn

#endif
