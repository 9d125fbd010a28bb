#ifndef SYMDYN_SPECTRA_HPP
#define SYMDYN_SPECTRA_HPP

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/generators.hpp"
#include "symdyn/language.hpp"

namespace symdyn {

enum class CountKind { block, synchronized, periodic, first_return };

/// Exact counts indexed by a contiguous range 1..N.
struct CountTable {
    CountKind kind = CountKind::block;
    std::map<int, BigInt> counts;

    int max_n() const;
    const BigInt& at(int n) const;
};

enum class EntropyMethod { perron, slope, ratio, loop_root };

/// Entropy in nats. `enclosure` is present only for certified computations.
struct EntropyEstimate {
    double point = 0.0;
    std::optional<std::pair<double, double>> enclosure;
    EntropyMethod method = EntropyMethod::slope;
    int horizon = 0;
    double ratio_estimate = 0.0; // log(c_N / c_{N-1}), reported alongside the slope
    bool transient = false;      // loop-root only: no root below the radius
};

/// Slope estimator (least-squares fit of log counts over the last `window`
/// points) with the ratio estimator reported alongside.
EntropyEstimate entropy_from_counts(const CountTable& t, int window);

/// Exact |C_n| = #{v : |v| = n, alpha v alpha admissible}.
BigInt synchronized_count(const Language& lang, const Word& alpha, int n);

CountTable block_count_table(const Language& lang, int max_n);
CountTable synchronized_count_table(const Language& lang, const Word& alpha, int max_n);

/// Synchronized-entropy estimate from C_n, n <= N.
EntropyEstimate h_syn(const Language& lang, const Word& alpha, int N, int window = 6);

struct ConsistencyReport {
    std::pair<double, double> cover_entropy; // certified h(G) enclosure
    EntropyEstimate hsyn;
    bool consistent = false;
};

/// h(G) = h_syn cross-check: consistent iff the h_syn estimate lies within
/// the h(G) enclosure widened by tol.
ConsistencyReport entropy_consistency_check(const LabeledGraph& cover, const Language& lang, const Word& alpha,
                                int N, double tol);

/// Entropy of a loop graph: -log of the root of f(x) = 1, by exact-rational
/// bisection on (0, radius). Transient when sup f < 1 below the radius.
EntropyEstimate loop_entropy(const LoopSpec& spec, double tol);

enum class RecurrenceClass { positive_recurrent, null_recurrent, transient };

struct RecurrenceReport {
    RecurrenceClass cls;
    double entropy;
    std::optional<double> mean_return_time; // steps; present when finite
};

RecurrenceReport classify_recurrence(const LoopSpec& spec, double tol = 1e-12);

struct GapEntry {
    Word extension;           // the additionally forbidden word
    bool empty_subsystem = false;
    double subsystem_entropy; // -inf sentinel for the empty subsystem
    double gap;
    bool positive_gap;
};

struct GapReport {
    double base_entropy; // estimate for X at the same horizon
    std::vector<GapEntry> entries;
    bool all_positive;
};

/// Entropy-gap harness over proper subsystems: for each admissible word w of
/// length <= extend_len, forbid w additionally and compare entropy estimates
/// at horizon N.
GapReport subsystem_gap_harness(const Language& lang, int extend_len, int N, int window = 6);

constexpr double entropy_neg_inf = -std::numeric_limits<double>::infinity();

} // namespace symdyn

#endif
