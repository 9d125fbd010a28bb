#ifndef SYMDYN_LANGUAGE_HPP
#define SYMDYN_LANGUAGE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "symdyn/labeled_graph.hpp"
#include "symdyn/sft.hpp"

namespace symdyn {

/// Membership oracle for the language B(X) of a shift space. Implementations
/// are immutable and safe for concurrent reads. When a right-resolving cover
/// is known it is exposed so that callers can switch from brute force to
/// automaton-based computation.
class Language {
public:
    virtual ~Language() = default;
    virtual const Alphabet& alphabet() const = 0;
    virtual bool admissible(const Word& w) const = 0;
    /// Right-resolving presentation of the same shift, when available.
    virtual const LabeledGraph* cover() const { return nullptr; }
};

class SftLanguage final : public Language {
public:
    explicit SftLanguage(SftPresentation p);

    const Alphabet& alphabet() const override { return sft_.alphabet(); }
    bool admissible(const Word& w) const override { return is_admissible(sft_, w); }
    const LabeledGraph* cover() const override { return &cover_; }
    const SftPresentation& presentation() const { return sft_; }

private:
    SftPresentation sft_;
    LabeledGraph cover_;
};

class SoficLanguage final : public Language {
public:
    explicit SoficLanguage(LabeledGraph g);

    const Alphabet& alphabet() const override { return graph_.alphabet(); }
    bool admissible(const Word& w) const override;
    const LabeledGraph* cover() const override { return rr_ ? &*rr_ : &graph_; }
    const LabeledGraph& presentation() const { return graph_; }

private:
    LabeledGraph graph_;
    std::optional<LabeledGraph> rr_; // right-resolving form when graph_ is not
    std::unique_ptr<SubsetAutomaton> aut_;
};

/// All admissible words of length exactly n, lexicographic, by pruned DFS.
std::vector<Word> admissible_words(const Language& lang, int n);

/// All admissible words of length 0..max_len.
std::vector<Word> admissible_words_up_to(const Language& lang, int max_len);

enum class SyncStatus { yes, no, unknown };

struct SyncVerdict {
    SyncStatus status;
    Word counter_u, counter_z; // for `no`: uw, wz admissible but uwz not
};

/// Bounded synchronizing-word test: exhausts all admissible u, z of length
/// <= horizon. A clean pass is only "unknown" unless `certified_yes` applies
/// (e.g. the SFT memory shortcut below).
SyncVerdict is_synchronizing_word(const Language& lang, const Word& w, int horizon);

/// SFT version: any admissible word of length >= memory is synchronizing, so
/// that case certifies "yes" immediately; shorter words fall back to the
/// bounded test.
SyncVerdict is_synchronizing_word(const SftLanguage& lang, const Word& w, int horizon);

} // namespace symdyn

#endif
