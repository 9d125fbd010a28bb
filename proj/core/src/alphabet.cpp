#include "symdyn/alphabet.hpp"

#include <algorithm>

namespace symdyn {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw input_error("alphabet: must be nonempty");
    for (size_t i = 0; i < tokens_.size(); ++i) {
        if (tokens_[i].empty()) throw input_error("alphabet: empty token");
        auto [it, fresh] = index_.emplace(tokens_[i], static_cast<int>(i));
        (void)it;
        if (!fresh) throw input_error("alphabet: duplicate token '" + tokens_[i] + "'");
    }
}

int Alphabet::find(const std::string& tok) const {
    auto it = index_.find(tok);
    return it == index_.end() ? -1 : it->second;
}

int Alphabet::index_of(const std::string& tok) const {
    int i = find(tok);
    if (i < 0) throw input_error("symbol '" + tok + "' not in alphabet");
    return i;
}

Word parse_word(const Alphabet& a, const std::string& text) {
    for (const auto& t : a.tokens())
        if (t.size() != 1)
            throw input_error("string words need a single-character alphabet; "
                              "pass the word as a token list instead");
    Word w;
    w.reserve(text.size());
    for (char c : text) w.push_back(a.index_of(std::string(1, c)));
    return w;
}

Word parse_word(const Alphabet& a, const std::vector<std::string>& toks) {
    Word w;
    w.reserve(toks.size());
    for (const auto& t : toks) w.push_back(a.index_of(t));
    return w;
}

std::string format_word(const Alphabet& a, const Word& w) {
    bool single = true;
    for (const auto& t : a.tokens())
        if (t.size() != 1) { single = false; break; }
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!single && i > 0) out += ' ';
        out += a.token(w[i]);
    }
    return out;
}

bool contains_factor(const Word& text, const Word& pat) {
    if (pat.empty()) return true;
    if (pat.size() > text.size()) return false;
    auto it = std::search(text.begin(), text.end(), pat.begin(), pat.end());
    return it != text.end();
}

std::vector<int> kmp_failure(const Word& pat) {
    std::vector<int> fail(pat.size(), 0);
    for (size_t i = 1; i < pat.size(); ++i) {
        int k = fail[i - 1];
        while (k > 0 && pat[i] != pat[static_cast<size_t>(k)]) k = fail[static_cast<size_t>(k) - 1];
        if (pat[i] == pat[static_cast<size_t>(k)]) ++k;
        fail[i] = k;
    }
    return fail;
}

int kmp_step(const Word& pat, const std::vector<int>& fail, int state, int c) {
    while (state > 0 && pat[static_cast<size_t>(state)] != c) state = fail[static_cast<size_t>(state) - 1];
    if (pat[static_cast<size_t>(state)] == c) ++state;
    return state;
}

} // namespace symdyn
