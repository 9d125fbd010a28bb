#ifndef SYMDYN_GENERATORS_HPP
#define SYMDYN_GENERATORS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "symdyn/language.hpp"

namespace symdyn {

/// Return words of a synchronizing word alpha: the members v·alpha with
/// alpha·v·alpha admissible and alpha not occurring inside v, plus the
/// conventional empty member (stored as a flag).
struct GeneratorSet {
    Alphabet alphabet;
    Word alpha;
    std::vector<Word> returns;  // listed members v·alpha with |v·alpha| <= horizon
    int horizon = 0;
    bool complete = false;      // the full set is finite and fully listed
    bool includes_empty = true;

    // When the cover analysis proves the first-return structure (a single
    // eventual cycle with unit multiplicities), the full length set is
    // tail_lengths plus the arithmetic progressions (start, step).
    bool structure_proved = false;
    std::vector<int> tail_lengths;
    std::vector<std::pair<int, int>> progressions;

    std::vector<int> listed_lengths() const;
};

/// Disjoint loops through one base vertex, with lengths given as a finite
/// multiset plus unit-multiplicity arithmetic progressions.
struct LoopSpec {
    std::vector<int> finite_lengths;
    std::vector<std::pair<int, int>> progressions; // (start, step), start >= 1, step >= 1

    void validate() const;
    bool empty() const { return finite_lengths.empty() && progressions.empty(); }
    /// Number of first-return loops of length n.
    int count_at(int n) const;
};

/// Enumerate the generator set of alpha up to |v·alpha| <= horizon.
/// `complete` is certified via the cover's first-return cycle structure when a
/// right-resolving cover is available; oracle-only inputs are never certified.
GeneratorSet extract_generators(const Language& lang, const Word& alpha, int horizon);

struct LoopGraphResult {
    LoopSpec spec;
    DiGraph graph; // loops through the base vertex; finite lengths only
    int base = 0;
};

/// One loop per generator length, all through a single base vertex.
LoopGraphResult generators_to_loop_graph(const GeneratorSet& s);

enum class MixingStatus { mixing, not_mixing, inconclusive };

struct MixingVerdict {
    MixingStatus status;
    int gcd;    // gcd of known generator lengths (at the horizon when inconclusive)
    int period; // = gcd when not_mixing
};

/// gcd criterion: mixing iff gcd of generator lengths is 1. A gcd > 1 is only
/// conclusive when the generator set is certified complete.
MixingVerdict mixing_gcd_test(const GeneratorSet& s);

/// Cyclic-cover decomposition index p = gcd of generator lengths.
/// precondition_error (reporting the gcd at the horizon) unless the set is
/// certified complete or its infinite structure is proved.
int cyclic_cover_period(const GeneratorSet& s);

/// Least N <= max_N such that every ordered pair of admissible words of length
/// <= word_horizon is joined by some w with |w| <= N; nullopt when no such N.
std::optional<int> svgl_witness(const Language& lang, int max_N, int word_horizon);

/// Direct mixing evidence: least N <= max_N such that for every
/// n in [N, N+span] some w of length exactly n makes alpha·w·alpha admissible.
std::optional<int> mixing_transition_length(const Language& lang, const Word& alpha, int max_N, int span);

/// Bounded totally-irreducible check: for each n <= n_max, every ordered pair
/// of admissible words of length <= word_horizon is joined by some w with
/// |w| a positive multiple of n, |w| <= len_cap.
bool totally_irreducible_check(const Language& lang, int n_max, int word_horizon, int len_cap);

/// Bounded weak-mixing evidence: for every ordered pair, the set of gap
/// lengths n <= n_cap admitting a connecting word contains `run_len`
/// consecutive integers.
bool weak_mixing_check(const Language& lang, int word_horizon, int run_len, int n_cap);

} // namespace symdyn

#endif
