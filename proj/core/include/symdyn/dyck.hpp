#ifndef SYMDYN_DYCK_HPP
#define SYMDYN_DYCK_HPP

#include <optional>
#include <vector>

#include "symdyn/language.hpp"
#include "symdyn/spectra.hpp"

namespace symdyn {

/// The Dyck shift on 2 pairs, alphabet ( [ ) ], optionally with one
/// additionally forbidden balanced word.
class DyckSystem {
public:
    static const Alphabet& dyck_alphabet();

    DyckSystem() = default;
    explicit DyckSystem(Word forbidden); // must be balanced with matched delimiters only

    const std::optional<Word>& forbidden() const { return forbidden_; }

    static bool is_opener(int sym) { return sym == 0 || sym == 1; }
    static int opener_type(int sym) { return sym; }        // for openers
    static int closer_type(int sym) { return sym - 2; }    // for closers

private:
    std::optional<Word> forbidden_;
};

/// Stack scan: openers push, a closer must match a nonempty stack's top, and a
/// closer on an empty stack is an admissible unmatched right delimiter.
bool dyck_admissible(const DyckSystem& d, const Word& w);

/// Language-oracle view of a Dyck system (no finite cover exists).
class DyckLanguage final : public Language {
public:
    explicit DyckLanguage(DyckSystem d) : sys_(std::move(d)) {}
    const Alphabet& alphabet() const override { return DyckSystem::dyck_alphabet(); }
    bool admissible(const Word& w) const override { return dyck_admissible(sys_, w); }
    const DyckSystem& system() const { return sys_; }

private:
    DyckSystem sys_;
};

enum class DyckClass { a, balanced, c, general };

/// ABC decomposition class of an admissible word: `a` ends with an unmatched
/// right delimiter (and has no unmatched left ones), `balanced` has every
/// delimiter matched, `c` starts with an unmatched left delimiter (and has no
/// unmatched right ones).
DyckClass dyck_classify(const DyckSystem& d, const Word& w);

/// Reversal bijection between the A and C classes: reverse letter order and
/// interchange left with right delimiters, keeping indices.
Word dyck_reverse_interchange(const Word& w);

constexpr int dyck_enumeration_cap = 14;
constexpr int dyck_dp_cap = 20;

/// Exact |B_n| by stack-state dynamic programming; budget_error above the cap.
BigInt dyck_block_count(const DyckSystem& d, int n);

/// Direct-enumeration oracle for the same count (lower cap).
BigInt dyck_block_count_enumerate(const DyckSystem& d, int n);

struct DyckClassCounts {
    // index n = 0..N; blocks[0] = 1 (epsilon), a/c[0] = 0, balanced[0] = 1.
    std::vector<BigInt> blocks, a, balanced, c;
};

/// One enumeration pass counting all classes for every n <= N.
DyckClassCounts dyck_count_classes(const DyckSystem& d, int N);

struct DyckAbcCounts {
    BigInt a, balanced, c;
};

DyckAbcCounts dyck_abc_counts(const DyckSystem& d, int n);

struct DyckEntropyReport {
    CountTable counts;                    // exact |B_n|, n = 1..N
    EntropyEstimate estimate;             // slope + ratio over the tail window
    std::vector<double> ratios;           // ratios[n] = log(B_{n+1}/B_n), n = 1..N-1
    std::optional<double> claimed_bound;  // log 5/2 for "()", log(2 + (4^{2q-1}-1)/4^{2q-1}) for |f|=2q
    std::optional<double> bound_margin;   // claimed_bound - estimate.point
    // Cross-check of the claimed |B_3(X_F)| = 64 for |f| = 4 against the exact
    // count; the flag fires when they disagree.
    std::optional<BigInt> b3_exact;
    bool b3_claim_discrepancy = false;
};

DyckEntropyReport dyck_entropy_report(const DyckSystem& d, int N, int window = 7);

struct DyckGrowthCheck {
    // ok[n] for n = 1..N-1: |C_{n+1}| * den <= num * |C_n| on exact counts.
    std::vector<bool> ok;
    std::vector<int> violations; // the n where the inequality fails
    long long num = 5, den = 2;
};

DyckGrowthCheck dyck_growth_inequality_check(const DyckSystem& d, int N,
                                             long long num = 5, long long den = 2);

} // namespace symdyn

#endif
