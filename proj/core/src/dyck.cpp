#include "symdyn/dyck.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace symdyn {

const Alphabet& DyckSystem::dyck_alphabet() {
    static const Alphabet a({"(", "[", ")", "]"});
    return a;
}

namespace {

/// Scan result over the four-delimiter alphabet.
struct ScanState {
    std::vector<int> stack;      // opener types
    int unmatched_closers = 0;
    bool mismatch = false;       // closer against a wrong nonempty top
    bool last_unmatched = false; // last processed symbol was a closer on empty stack
    bool always_positive = true; // stack nonempty after every processed symbol

    void push_symbol(int sym) {
        last_unmatched = false;
        if (DyckSystem::is_opener(sym)) {
            stack.push_back(DyckSystem::opener_type(sym));
        } else if (stack.empty()) {
            ++unmatched_closers;
            last_unmatched = true;
        } else if (stack.back() == DyckSystem::closer_type(sym)) {
            stack.pop_back();
        } else {
            mismatch = true;
        }
        if (stack.empty()) always_positive = false;
    }
};

bool bracket_admissible(const Word& w) {
    ScanState s;
    for (int sym : w) {
        if (sym < 0 || sym > 3) throw input_error("dyck: symbol outside the delimiter alphabet");
        s.push_symbol(sym);
        if (s.mismatch) return false;
    }
    return true;
}

bool is_balanced_matched(const Word& w) {
    ScanState s;
    for (int sym : w) {
        if (sym < 0 || sym > 3) return false;
        s.push_symbol(sym);
        if (s.mismatch || s.unmatched_closers > 0) return false;
    }
    return s.stack.empty();
}

} // namespace

DyckSystem::DyckSystem(Word forbidden) {
    if (!is_balanced_matched(forbidden))
        throw input_error("dyck: the forbidden word must be balanced with matched delimiters only");
    forbidden_ = std::move(forbidden);
}

bool dyck_admissible(const DyckSystem& d, const Word& w) {
    if (!bracket_admissible(w)) return false;
    if (d.forbidden() && contains_factor(w, *d.forbidden())) return false;
    return true;
}

DyckClass dyck_classify(const DyckSystem& d, const Word& w) {
    if (!dyck_admissible(d, w)) throw input_error("dyck_classify: word is not admissible");
    ScanState s;
    for (int sym : w) s.push_symbol(sym);
    if (s.unmatched_closers == 0 && s.stack.empty()) return DyckClass::balanced;
    if (s.unmatched_closers > 0 && s.stack.empty() && s.last_unmatched) return DyckClass::a;
    if (s.unmatched_closers == 0 && s.always_positive) return DyckClass::c;
    return DyckClass::general;
}

Word dyck_reverse_interchange(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& sym : out) sym = DyckSystem::is_opener(sym) ? sym + 2 : sym - 2;
    return out;
}

namespace {

// Stack encoded as a bit string with a leading sentinel 1; opener types are
// the bits. Combined with the KMP state of the forbidden word.
struct DpKey {
    static uint64_t make(uint64_t stack_bits, int kmp, int kmp_states) {
        return stack_bits * static_cast<uint64_t>(kmp_states) + static_cast<uint64_t>(kmp);
    }
};

} // namespace

BigInt dyck_block_count(const DyckSystem& d, int n) {
    if (n < 0) throw input_error("dyck_block_count: negative length");
    if (n > dyck_dp_cap) throw budget_error("dyck_block_count: n above the dynamic-programming cap");
    if (n == 0) return 1;
    const Word f = d.forbidden().value_or(Word{});
    const int K = static_cast<int>(f.size());
    const std::vector<int> fail = f.empty() ? std::vector<int>{} : kmp_failure(f);
    const int kmp_states = K + 1;

    std::unordered_map<uint64_t, BigInt> dp;
    dp[DpKey::make(1, 0, kmp_states)] = 1;
    for (int step = 0; step < n; ++step) {
        std::unordered_map<uint64_t, BigInt> next;
        next.reserve(dp.size() * 3);
        for (const auto& [key, cnt] : dp) {
            uint64_t stack_bits = key / static_cast<uint64_t>(kmp_states);
            int kmp = static_cast<int>(key % static_cast<uint64_t>(kmp_states));
            for (int sym = 0; sym < 4; ++sym) {
                uint64_t sb = stack_bits;
                if (DyckSystem::is_opener(sym)) {
                    sb = (sb << 1) | static_cast<uint64_t>(sym);
                } else if (sb == 1) {
                    // closer on empty stack: admissible, stack unchanged
                } else if (static_cast<int>(sb & 1) == DyckSystem::closer_type(sym)) {
                    sb >>= 1;
                } else {
                    continue; // mismatched closer
                }
                int k2 = 0;
                if (K > 0) {
                    k2 = kmp_step(f, fail, kmp, sym);
                    if (k2 == K) continue; // forbidden factor completed
                }
                next[DpKey::make(sb, k2, kmp_states)] += cnt;
            }
        }
        dp.swap(next);
    }
    BigInt total = 0;
    for (const auto& [key, cnt] : dp) total += cnt;
    return total;
}

namespace {

struct ClassCounter {
    const DyckSystem& d;
    const Word f;
    const std::vector<int> fail;
    int N;
    DyckClassCounts out;

    explicit ClassCounter(const DyckSystem& sys, int cap)
        : d(sys),
          f(sys.forbidden().value_or(Word{})),
          fail(f.empty() ? std::vector<int>{} : kmp_failure(f)),
          N(cap) {
        out.blocks.assign(static_cast<size_t>(N) + 1, 0);
        out.a.assign(static_cast<size_t>(N) + 1, 0);
        out.balanced.assign(static_cast<size_t>(N) + 1, 0);
        out.c.assign(static_cast<size_t>(N) + 1, 0);
        out.blocks[0] = 1;
        out.balanced[0] = 1; // epsilon is balanced; A_0 = C_0 = 0 as words, 1 only by the split convention
    }

    void run() {
        ScanState s;
        rec(s, 0, 0);
    }

    void rec(ScanState& s, int len, int kmp) {
        if (len > 0) {
            out.blocks[static_cast<size_t>(len)] += 1;
            if (s.unmatched_closers == 0 && s.stack.empty())
                out.balanced[static_cast<size_t>(len)] += 1;
            else if (s.unmatched_closers > 0 && s.stack.empty() && s.last_unmatched)
                out.a[static_cast<size_t>(len)] += 1;
            else if (s.unmatched_closers == 0 && s.always_positive)
                out.c[static_cast<size_t>(len)] += 1;
        }
        if (len == N) return;
        for (int sym = 0; sym < 4; ++sym) {
            ScanState saved = s;
            s.push_symbol(sym);
            int k2 = 0;
            bool ok = !s.mismatch;
            if (ok && !f.empty()) {
                k2 = kmp_step(f, fail, kmp, sym);
                if (k2 == static_cast<int>(f.size())) ok = false;
            }
            if (ok) rec(s, len + 1, k2);
            s = std::move(saved);
        }
    }
};

} // namespace

BigInt dyck_block_count_enumerate(const DyckSystem& d, int n) {
    if (n < 0) throw input_error("dyck_block_count_enumerate: negative length");
    if (n > dyck_enumeration_cap)
        throw budget_error("dyck_block_count_enumerate: n above the enumeration cap");
    ClassCounter counter(d, n);
    counter.run();
    return counter.out.blocks[static_cast<size_t>(n)];
}

DyckClassCounts dyck_count_classes(const DyckSystem& d, int N) {
    if (N < 0) throw input_error("dyck_count_classes: negative length");
    if (N > dyck_enumeration_cap) throw budget_error("dyck_count_classes: N above the enumeration cap");
    ClassCounter counter(d, N);
    counter.run();
    return counter.out;
}

DyckAbcCounts dyck_abc_counts(const DyckSystem& d, int n) {
    if (n < 1) throw input_error("dyck_abc_counts: n must be positive");
    DyckClassCounts all = dyck_count_classes(d, n);
    return {all.a[static_cast<size_t>(n)], all.balanced[static_cast<size_t>(n)], all.c[static_cast<size_t>(n)]};
}

DyckEntropyReport dyck_entropy_report(const DyckSystem& d, int N, int window) {
    if (N < 2) throw input_error("dyck_entropy_report: N must be >= 2");
    DyckEntropyReport rep;
    rep.counts.kind = CountKind::block;
    for (int n = 1; n <= N; ++n) rep.counts.counts[n] = dyck_block_count(d, n);
    rep.estimate = entropy_from_counts(rep.counts, window);
    for (int n = 1; n < N; ++n)
        rep.ratios.push_back(log_big(rep.counts.at(n + 1)) - log_big(rep.counts.at(n)));
    if (d.forbidden()) {
        const Word& f = *d.forbidden();
        const Word paren_pair{0, 2}; // "()"
        if (f == paren_pair) {
            rep.claimed_bound = std::log(2.5);
        } else {
            const int q = static_cast<int>(f.size()) / 2;
            const double denom = std::pow(4.0, 2 * q - 1);
            rep.claimed_bound = std::log(2.0 + (denom - 1.0) / denom);
        }
        rep.bound_margin = *rep.claimed_bound - rep.estimate.point;
        if (f.size() == 4) {
            rep.b3_exact = dyck_block_count(d, 3);
            rep.b3_claim_discrepancy = (*rep.b3_exact != 64);
        }
    }
    return rep;
}

DyckGrowthCheck dyck_growth_inequality_check(const DyckSystem& d, int N, long long num, long long den) {
    if (N < 2) throw input_error("dyck_growth_inequality_check: N must be >= 2");
    DyckClassCounts all = dyck_count_classes(d, N);
    DyckGrowthCheck check;
    check.num = num;
    check.den = den;
    for (int n = 1; n < N; ++n) {
        bool ok = all.c[static_cast<size_t>(n) + 1] * den <= all.c[static_cast<size_t>(n)] * num;
        check.ok.push_back(ok);
        if (!ok) check.violations.push_back(n);
    }
    return check;
}

} // namespace symdyn
