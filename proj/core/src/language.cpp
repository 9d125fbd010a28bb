#include "symdyn/language.hpp"

namespace symdyn {

SftLanguage::SftLanguage(SftPresentation p) : sft_(std::move(p)), cover_(sft_to_labeled_graph(sft_)) {}

SoficLanguage::SoficLanguage(LabeledGraph g) : graph_(std::move(g)) {
    if (!graph_.right_resolving()) rr_ = determinize(graph_).graph;
    aut_ = std::make_unique<SubsetAutomaton>(graph_);
}

bool SoficLanguage::admissible(const Word& w) const {
    return aut_->walk(aut_->start(), w) >= 0;
}

namespace {

void words_rec(const Language& lang, Word& prefix, int n, std::vector<Word>& out) {
    if (static_cast<int>(prefix.size()) == n) {
        out.push_back(prefix);
        return;
    }
    for (int a = 0; a < lang.alphabet().size(); ++a) {
        prefix.push_back(a);
        if (lang.admissible(prefix)) words_rec(lang, prefix, n, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Word> admissible_words(const Language& lang, int n) {
    std::vector<Word> out;
    Word prefix;
    words_rec(lang, prefix, n, out);
    return out;
}

std::vector<Word> admissible_words_up_to(const Language& lang, int max_len) {
    std::vector<Word> out;
    for (int n = 0; n <= max_len; ++n) {
        auto words = admissible_words(lang, n);
        out.insert(out.end(), words.begin(), words.end());
    }
    return out;
}

SyncVerdict is_synchronizing_word(const Language& lang, const Word& w, int horizon) {
    if (!lang.admissible(w)) throw input_error("is_synchronizing_word: word is not admissible");
    auto contexts = admissible_words_up_to(lang, horizon);
    std::vector<const Word*> left, right;
    for (const auto& u : contexts) {
        Word uw = u;
        uw.insert(uw.end(), w.begin(), w.end());
        if (lang.admissible(uw)) left.push_back(&u);
        Word wz = w;
        wz.insert(wz.end(), u.begin(), u.end());
        if (lang.admissible(wz)) right.push_back(&u);
    }
    for (const Word* u : left) {
        for (const Word* z : right) {
            Word uwz = *u;
            uwz.insert(uwz.end(), w.begin(), w.end());
            uwz.insert(uwz.end(), z->begin(), z->end());
            if (!lang.admissible(uwz)) return {SyncStatus::no, *u, *z};
        }
    }
    return {SyncStatus::unknown, {}, {}};
}

SyncVerdict is_synchronizing_word(const SftLanguage& lang, const Word& w, int horizon) {
    if (!lang.admissible(w)) throw input_error("is_synchronizing_word: word is not admissible");
    if (static_cast<int>(w.size()) >= lang.presentation().memory()) return {SyncStatus::yes, {}, {}};
    return is_synchronizing_word(static_cast<const Language&>(lang), w, horizon);
}

} // namespace symdyn
