#include "symdyn/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace symdyn {

int CountTable::max_n() const {
    int n = 0;
    while (counts.count(n + 1)) ++n;
    return n;
}

const BigInt& CountTable::at(int n) const {
    auto it = counts.find(n);
    if (it == counts.end()) throw input_error("count table: undefined at n=" + std::to_string(n));
    return it->second;
}

namespace {

EntropyEstimate slope_ratio_estimate(const CountTable& t, int window) {
    const int N = t.max_n();
    if (window < 2) throw input_error("entropy estimator: window must be >= 2");
    if (N < window + 1) throw input_error("entropy estimator: count range shorter than window + 1");
    EntropyEstimate est;
    est.method = EntropyMethod::slope;
    est.horizon = N;
    for (int n = N - window + 1; n <= N; ++n)
        if (t.at(n) == 0) { // language died: empty subsystem
            est.point = entropy_neg_inf;
            est.ratio_estimate = entropy_neg_inf;
            return est;
        }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int n = N - window + 1; n <= N; ++n) {
        double x = n, y = log_big(t.at(n));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double w = window;
    est.point = (w * sxy - sx * sy) / (w * sxx - sx * sx);
    est.ratio_estimate = t.at(N - 1) == 0 ? entropy_neg_inf
                                          : log_big(t.at(N)) - log_big(t.at(N - 1));
    return est;
}

} // namespace

EntropyEstimate entropy_from_counts(const CountTable& t, int window) {
    if (t.kind != CountKind::block)
        throw input_error("entropy_from_counts: table kind must be block counts");
    return slope_ratio_estimate(t, window);
}

BigInt synchronized_count(const Language& lang, const Word& alpha, int n) {
    if (n < 0) throw input_error("synchronized_count: negative length");
    if (!lang.admissible(alpha)) throw input_error("synchronized_count: alpha not admissible");
    if (const LabeledGraph* cover = lang.cover()) {
        SubsetAutomaton aut(*cover);
        int s0 = aut.walk(aut.start(), alpha);
        if (s0 < 0) return 0;
        std::vector<BigInt> dp(static_cast<size_t>(aut.state_count()), 0);
        dp[static_cast<size_t>(s0)] = 1;
        for (int step = 0; step < n; ++step) {
            std::vector<BigInt> next(static_cast<size_t>(aut.state_count()), 0);
            for (int q = 0; q < aut.state_count(); ++q) {
                if (dp[static_cast<size_t>(q)] == 0) continue;
                for (int a = 0; a < aut.symbol_count(); ++a)
                    if (int tq = aut.step(q, a); tq >= 0) next[static_cast<size_t>(tq)] += dp[static_cast<size_t>(q)];
            }
            dp.swap(next);
        }
        BigInt total = 0;
        for (int q = 0; q < aut.state_count(); ++q)
            if (dp[static_cast<size_t>(q)] != 0 && aut.walk(q, alpha) >= 0) total += dp[static_cast<size_t>(q)];
        return total;
    }
    // Oracle fallback: pruned DFS over v.
    BigInt total = 0;
    Word v = alpha;
    struct Rec {
        const Language& lang;
        const Word& alpha;
        BigInt& total;
        void go(Word& av, int remaining) {
            if (!lang.admissible(av)) return;
            if (remaining == 0) {
                Word ava = av;
                ava.insert(ava.end(), alpha.begin(), alpha.end());
                if (lang.admissible(ava)) ++total;
                return;
            }
            for (int a = 0; a < lang.alphabet().size(); ++a) {
                av.push_back(a);
                go(av, remaining - 1);
                av.pop_back();
            }
        }
    } rec{lang, alpha, total};
    rec.go(v, n);
    return total;
}

CountTable block_count_table(const Language& lang, int max_n) {
    CountTable t;
    t.kind = CountKind::block;
    if (const LabeledGraph* cover = lang.cover()) {
        for (int n = 1; n <= max_n; ++n) t.counts[n] = sofic_block_count(*cover, n);
    } else {
        for (int n = 1; n <= max_n; ++n)
            t.counts[n] = static_cast<BigInt>(admissible_words(lang, n).size());
    }
    return t;
}

CountTable synchronized_count_table(const Language& lang, const Word& alpha, int max_n) {
    CountTable t;
    t.kind = CountKind::synchronized;
    for (int n = 1; n <= max_n; ++n) t.counts[n] = synchronized_count(lang, alpha, n);
    return t;
}

EntropyEstimate h_syn(const Language& lang, const Word& alpha, int N, int window) {
    return slope_ratio_estimate(synchronized_count_table(lang, alpha, N), window);
}

ConsistencyReport entropy_consistency_check(const LabeledGraph& cover, const Language& lang, const Word& alpha,
                                int N, double tol) {
    ConsistencyReport rep;
    rep.cover_entropy = graph_entropy(cover.underlying(), 1e-9);
    rep.hsyn = h_syn(lang, alpha, N);
    rep.consistent = rep.hsyn.point >= rep.cover_entropy.first - tol &&
                     rep.hsyn.point <= rep.cover_entropy.second + tol;
    return rep;
}

namespace {

BigRat rat_pow(const BigRat& x, int e) {
    BigRat r = 1, base = x;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) r *= base;
        if (k > 1) base *= base;
    }
    return r;
}

BigRat eval_first_return(const LoopSpec& spec, const BigRat& x) {
    BigRat acc = 0;
    for (int l : spec.finite_lengths) acc += rat_pow(x, l);
    for (auto [start, step] : spec.progressions) {
        BigRat xs = rat_pow(x, step);
        acc += rat_pow(x, start) / (1 - xs);
    }
    return acc;
}

struct LoopRoot {
    BigRat lo, hi;   // bracket with f(lo) < 1 <= f(hi)
    bool transient;  // sup f < 1 below the radius
};

LoopRoot bisect_loop_root(const LoopSpec& spec, double tol) {
    spec.validate();
    if (spec.empty()) throw input_error("loop_entropy: empty loop spec");
    const bool bounded_radius = !spec.progressions.empty();
    BigRat lo = 0;
    BigRat hi;
    if (bounded_radius) {
        // f diverges at t -> 1, so a root exists strictly inside (0, 1).
        // Bracket start: 1 - eps with eps = 1e-12 relative.
        hi = BigRat(999999999999LL, 1000000000000LL);
        while (eval_first_return(spec, hi) < 1) {
            hi = (hi + 1) / 2;
            if (1 - hi < BigRat(1, BigInt(1) << 80))
                return {lo, 1, true}; // unreachable for valid progressions
        }
    } else {
        hi = 1;
        while (eval_first_return(spec, hi) < 1) hi *= 2; // polynomial f: root exists
    }
    for (int it = 0; it < 300; ++it) {
        if (lo > 0) {
            double width = log_big(hi) - log_big(lo);
            if (width <= tol) break;
        }
        BigRat mid = (lo + hi) / 2;
        if (eval_first_return(spec, mid) >= 1) hi = mid;
        else lo = mid;
    }
    return {lo, hi, false};
}

} // namespace

EntropyEstimate loop_entropy(const LoopSpec& spec, double tol) {
    if (tol <= 0) throw input_error("loop_entropy: tol must be positive");
    LoopRoot root = bisect_loop_root(spec, tol);
    EntropyEstimate est;
    est.method = EntropyMethod::loop_root;
    if (root.transient) {
        est.transient = true;
        est.point = 0.0; // -log(radius) with radius 1
        return est;
    }
    double lo_e = -log_big(root.hi);
    double hi_e = root.lo > 0 ? -log_big(root.lo) : lo_e + tol;
    est.point = 0.5 * (lo_e + hi_e);
    est.enclosure = std::make_pair(lo_e, hi_e);
    return est;
}

RecurrenceReport classify_recurrence(const LoopSpec& spec, double tol) {
    LoopRoot root = bisect_loop_root(spec, tol);
    RecurrenceReport rep{RecurrenceClass::positive_recurrent, 0.0, std::nullopt};
    if (root.transient) {
        rep.cls = RecurrenceClass::transient;
        return rep;
    }
    double x = 0.5 * (root.lo.convert_to<double>() + root.hi.convert_to<double>());
    rep.entropy = -std::log(x);
    // Mean return time sum n f_n x^n = x f'(x), in closed form.
    bool finite_mean = true;
    double mean = 0.0;
    for (int l : spec.finite_lengths) mean += l * std::pow(x, l);
    for (auto [start, step] : spec.progressions) {
        if (x >= 1.0) { finite_mean = false; break; }
        double xs = std::pow(x, step);
        double xa = std::pow(x, start);
        mean += (start * xa * (1 - xs) + step * xa * xs) / ((1 - xs) * (1 - xs));
    }
    if (finite_mean) {
        rep.cls = RecurrenceClass::positive_recurrent;
        rep.mean_return_time = mean;
    } else {
        rep.cls = RecurrenceClass::null_recurrent;
    }
    return rep;
}

namespace {

/// Count admissible n-blocks that avoid `w` as a factor, via the cover's
/// subset automaton crossed with the KMP automaton of w.
BigInt count_blocks_avoiding(const LabeledGraph& cover, const Word& w, int n) {
    SubsetAutomaton aut(cover);
    auto fail = kmp_failure(w);
    const int K = static_cast<int>(w.size());
    const int S = aut.state_count();
    auto idx = [&](int s, int k) { return static_cast<size_t>(s) * static_cast<size_t>(K) + static_cast<size_t>(k); };
    std::vector<BigInt> dp(static_cast<size_t>(S) * static_cast<size_t>(K), 0);
    dp[idx(aut.start(), 0)] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> next(dp.size(), 0);
        for (int s = 0; s < S; ++s) {
            for (int k = 0; k < K; ++k) {
                const BigInt& c = dp[idx(s, k)];
                if (c == 0) continue;
                for (int a = 0; a < aut.symbol_count(); ++a) {
                    int t = aut.step(s, a);
                    if (t < 0) continue;
                    int k2 = kmp_step(w, fail, k, a);
                    if (k2 == K) continue; // word w completed: excluded
                    next[idx(t, k2)] += c;
                }
            }
        }
        dp.swap(next);
    }
    BigInt total = 0;
    for (const auto& c : dp) total += c;
    return total;
}

} // namespace

GapReport subsystem_gap_harness(const Language& lang, int extend_len, int N, int window) {
    if (extend_len < 1) throw input_error("subsystem_gap_harness: extend_len must be positive");
    const LabeledGraph* cover = lang.cover();
    if (cover == nullptr)
        throw precondition_error("subsystem_gap_harness: a right-resolving cover is required");
    if (!is_irreducible(cover->underlying()))
        throw precondition_error("subsystem_gap_harness: presented shift must be irreducible");

    GapReport rep;
    CountTable base = block_count_table(lang, N);
    rep.base_entropy = slope_ratio_estimate(base, window).point;
    rep.all_positive = true;
    for (int len = 1; len <= extend_len; ++len) {
        for (const auto& w : admissible_words(lang, len)) {
            CountTable sub;
            sub.kind = CountKind::block;
            for (int n = 1; n <= N; ++n) sub.counts[n] = count_blocks_avoiding(*cover, w, n);
            GapEntry entry;
            entry.extension = w;
            if (sub.at(N) == 0) {
                entry.empty_subsystem = true;
                entry.subsystem_entropy = entropy_neg_inf;
                entry.gap = rep.base_entropy;
            } else {
                entry.subsystem_entropy = slope_ratio_estimate(sub, window).point;
                entry.gap = rep.base_entropy - entry.subsystem_entropy;
            }
            entry.positive_gap = entry.gap > 0;
            if (!entry.positive_gap) rep.all_positive = false;
            rep.entries.push_back(std::move(entry));
        }
    }
    return rep;
}

} // namespace symdyn
