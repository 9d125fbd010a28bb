#include "symdyn/sft.hpp"

#include <algorithm>
#include <map>

#include "symdyn/errors.hpp"
#include "symdyn/labeled_graph.hpp"

namespace symdyn {

SftPresentation::SftPresentation(Alphabet a, std::vector<Word> forbidden)
    : alphabet_(std::move(a)) {
    for (const auto& w : forbidden) {
        if (w.empty()) throw input_error("sft: forbidden words must have length >= 1");
        for (int c : w)
            if (c < 0 || c >= alphabet_.size())
                throw input_error("sft: forbidden word symbol out of alphabet");
    }
    // Antichain pruning: drop any word that contains another forbidden word.
    std::sort(forbidden.begin(), forbidden.end(),
              [](const Word& x, const Word& y) { return x.size() < y.size() || (x.size() == y.size() && x < y); });
    forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
    for (const auto& w : forbidden) {
        bool redundant = false;
        for (const auto& kept : forbidden_)
            if (kept.size() < w.size() && contains_factor(w, kept)) { redundant = true; break; }
        if (!redundant) forbidden_.push_back(w);
    }
    std::sort(forbidden_.begin(), forbidden_.end());
    int maxlen = 0;
    for (const auto& w : forbidden_) maxlen = std::max(maxlen, static_cast<int>(w.size()));
    memory_ = maxlen == 0 ? 0 : maxlen - 1;
}

bool is_admissible(const SftPresentation& p, const Word& w) {
    for (int c : w)
        if (c < 0 || c >= p.alphabet().size())
            throw input_error("is_admissible: symbol outside alphabet");
    for (const auto& f : p.forbidden())
        if (contains_factor(w, f)) return false;
    return true;
}

namespace {

void enumerate_rec(const SftPresentation& p, Word& prefix, int n, std::vector<Word>& out) {
    if (static_cast<int>(prefix.size()) == n) {
        out.push_back(prefix);
        return;
    }
    for (int a = 0; a < p.alphabet().size(); ++a) {
        prefix.push_back(a);
        // Factorial language: only factors ending at the new symbol can break.
        bool ok = true;
        for (const auto& f : p.forbidden()) {
            if (f.size() > prefix.size()) continue;
            if (std::equal(f.begin(), f.end(), prefix.end() - static_cast<long>(f.size()))) { ok = false; break; }
        }
        if (ok) enumerate_rec(p, prefix, n, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Word> enumerate_blocks(const SftPresentation& p, int n) {
    if (n < 0) throw input_error("enumerate_blocks: negative length");
    std::vector<Word> out;
    Word prefix;
    enumerate_rec(p, prefix, n, out);
    return out;
}

BigInt count_blocks(const SftPresentation& p, int n) {
    if (n < 0) throw input_error("count_blocks: negative length");
    const int m = p.memory();
    if (n <= m) return static_cast<BigInt>(enumerate_blocks(p, n).size());

    std::vector<Word> states = enumerate_blocks(p, m);
    std::map<Word, int> id;
    for (size_t i = 0; i < states.size(); ++i) id.emplace(states[i], static_cast<int>(i));
    std::vector<std::vector<int>> trans(states.size());
    for (size_t i = 0; i < states.size(); ++i) {
        for (int a = 0; a < p.alphabet().size(); ++a) {
            Word ext = states[i];
            ext.push_back(a);
            if (!is_admissible(p, ext)) continue;
            Word suffix(ext.end() - m, ext.end());
            trans[i].push_back(id.at(suffix));
        }
    }
    std::vector<BigInt> dp(states.size(), 1);
    for (int step = m; step < n; ++step) {
        std::vector<BigInt> next(states.size(), 0);
        for (size_t i = 0; i < states.size(); ++i)
            for (int j : trans[i]) next[static_cast<size_t>(j)] += dp[i];
        // dp[state] = number of admissible words of the current length ending
        // in `state`; push forward by one symbol.
        dp.swap(next);
    }
    BigInt total = 0;
    for (const auto& c : dp) total += c;
    return total;
}

LabeledGraph sft_to_labeled_graph(const SftPresentation& p) {
    const int m = p.memory();
    std::vector<Word> states = enumerate_blocks(p, m);
    std::map<Word, int> id;
    for (size_t i = 0; i < states.size(); ++i) id.emplace(states[i], static_cast<int>(i));
    LabeledGraph g(p.alphabet(), static_cast<int>(states.size()));
    for (size_t i = 0; i < states.size(); ++i) {
        for (int a = 0; a < p.alphabet().size(); ++a) {
            Word ext = states[i];
            ext.push_back(a);
            if (!is_admissible(p, ext)) continue;
            Word suffix(ext.end() - m, ext.end());
            g.add_edge(static_cast<int>(i), id.at(suffix), a);
        }
    }
    return g;
}

} // namespace symdyn
