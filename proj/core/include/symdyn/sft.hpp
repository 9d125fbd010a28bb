#ifndef SYMDYN_SFT_HPP
#define SYMDYN_SFT_HPP

#include <vector>

#include "symdyn/alphabet.hpp"
#include "symdyn/bigint.hpp"

namespace symdyn {

class LabeledGraph;

/// Forbidden-word presentation of a shift of finite type. The forbidden set is
/// pruned to an antichain under the factor order at construction, so equal
/// presentations compare equal.
class SftPresentation {
public:
    SftPresentation(Alphabet a, std::vector<Word> forbidden);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Word>& forbidden() const { return forbidden_; }

    /// max forbidden-word length minus 1 (0 for a full shift).
    int memory() const { return memory_; }

    bool operator==(const SftPresentation& o) const {
        return alphabet_ == o.alphabet_ && forbidden_ == o.forbidden_;
    }

private:
    Alphabet alphabet_;
    std::vector<Word> forbidden_;
    int memory_;
};

/// true iff no forbidden word occurs in w as a factor.
bool is_admissible(const SftPresentation& p, const Word& w);

/// Exact |B_n| via transfer-matrix dynamic programming over memory-length
/// suffix states.
BigInt count_blocks(const SftPresentation& p, int n);

/// Direct-enumeration oracle: all admissible n-blocks, in lexicographic order.
std::vector<Word> enumerate_blocks(const SftPresentation& p, int n);

/// De Bruijn-style vertex graph: states are admissible memory-length words,
/// edges labeled by the appended symbol. Right-resolving presentation of the
/// same SFT.
LabeledGraph sft_to_labeled_graph(const SftPresentation& p);

} // namespace symdyn

#endif
