// Acceptance gate: one line per criterion, PASS/FAIL, nonzero exit on any FAIL.
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include <symdyn/dyck.hpp>
#include <symdyn/language.hpp>
#include <symdyn/series.hpp>
#include <symdyn/spectra.hpp>

#include "fixtures.hpp"

using namespace symdyn;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("criterion %d (%s): %s%s%s\n", idx, name.c_str(), ok ? "PASS" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

const double log_phi = std::log((1.0 + std::sqrt(5.0)) / 2.0);

IntSeries fib_series(std::vector<long long> cs) {
    IntSeries s(static_cast<int>(cs.size()) - 1);
    for (size_t i = 0; i < cs.size(); ++i) s[i] = cs[i];
    return s;
}

void criterion1() {
    auto gm = fixtures::golden_mean();
    auto cover = sft_to_labeled_graph(gm);
    auto [lo, hi] = graph_entropy(cover.underlying(), 1e-6);
    bool ok = (hi - lo <= 1e-6) && lo <= log_phi && log_phi <= hi;

    SftLanguage lang(gm);
    auto est = entropy_from_counts(block_count_table(lang, 12), 6);
    ok = ok && std::abs(est.point - log_phi) <= 5e-3;

    LoopSpec spec;
    spec.finite_lengths = {1, 2};
    auto loop = loop_entropy(spec, 1e-7);
    ok = ok && std::abs(loop.point - log_phi) <= 1e-6;
    report(1, "golden-mean cross-validation", ok);
}

void criterion2() {
    auto gm = fixtures::golden_mean();
    PeriodicTable t;
    for (int n = 1; n <= 8; ++n) t.set(n, periodic_points_sft_enumerate(gm, n));
    IntSeries z = zeta_from_periodic(t, 8);
    bool ok = (z == fib_series({1, 1, 2, 3, 5, 8, 13, 21, 34}));
    ok = ok && (z == zeta_loop(fib_series({0, 1, 1, 0, 0, 0, 0, 0, 0}), 8));

    PeriodicTable t2;
    for (int n = 1; n <= 8; ++n) t2.set(n, periodic_points_sft_enumerate(fixtures::full_2shift(), n));
    IntSeries z2 = zeta_from_periodic(t2, 8);
    for (int k = 0; k <= 8; ++k) ok = ok && (z2[static_cast<size_t>(k)] == (BigInt(1) << k));
    report(2, "zeta exactness", ok);
}

void criterion3() {
    PeriodicTable t;
    auto even = fixtures::even_shift();
    for (int n = 1; n <= 8; ++n) t.set(n, periodic_points_sofic(even, n));
    IntSeries direct = zeta_from_periodic(t, 8);

    LoopSpec level1; // loops of every odd length
    level1.progressions = {{1, 2}};
    LoopSpec level2; // derived part: a single fixed point
    level2.finite_lengths = {1};
    IntSeries tower =
        zeta_depth_product({first_return_series(level1, 8), first_return_series(level2, 8)}, 8);
    report(3, "depth-1 tower product equals the even-shift zeta", direct == tower);
}

void criterion4() {
    SoficLanguage even(fixtures::even_shift());
    auto even_set = extract_generators(even, Word{0}, 9);
    auto even_verdict = mixing_gcd_test(even_set);
    bool ok = even_verdict.status == MixingStatus::mixing && even_verdict.gcd == 1;
    ok = ok && mixing_transition_length(even, Word{0}, 20, 3).has_value();

    SftLanguage cyc(fixtures::three_cycle());
    auto cyc_set = extract_generators(cyc, Word{0}, 9);
    auto cyc_verdict = mixing_gcd_test(cyc_set);
    ok = ok && cyc_verdict.status == MixingStatus::not_mixing && cyc_verdict.period == 3;
    ok = ok && !mixing_transition_length(cyc, Word{0}, 20, 3).has_value();
    report(4, "gcd mixing test with direct witnesses", ok);
}

void criterion5() {
    SftLanguage full(fixtures::full_2shift());
    SftLanguage gm(fixtures::golden_mean());
    SoficLanguage even(fixtures::even_shift());
    bool ok = entropy_consistency_check(*full.cover(), full, Word{0}, 12, 0.02).consistent &&
              entropy_consistency_check(*gm.cover(), gm, Word{0}, 12, 0.02).consistent &&
              entropy_consistency_check(*even.cover(), even, Word{0}, 12, 0.02).consistent;
    report(5, "synchronized entropy matches cover entropy", ok);
}

void criterion6() {
    DyckSystem d;
    bool ok = dyck_block_count(d, 1) == 4 && dyck_block_count(d, 2) == 14;
    ok = ok && dyck_abc_counts(d, 1).c == 2;
    auto rep = dyck_entropy_report(d, 14, 7);
    for (size_t i = 11; i <= 12; ++i) { // ratios[i] = log(B_{i+2}/B_{i+1})
        double r = std::exp(rep.ratios[i]);
        ok = ok && r >= 2.5 && r <= 3.3;
    }
    ok = ok && std::abs(rep.estimate.point - std::log(3.0)) <= 0.15;
    report(6, "dyck counts and entropy", ok);
}

void criterion7() {
    DyckSystem plain;
    auto base = dyck_entropy_report(plain, 14, 7);
    DyckSystem paren(parse_word(DyckSystem::dyck_alphabet(), "()"));
    auto rep1 = dyck_entropy_report(paren, 14, 7);
    bool ok = rep1.estimate.point <= base.estimate.point - 0.05;
    ok = ok && rep1.claimed_bound && std::abs(*rep1.claimed_bound - std::log(2.5)) < 1e-12;

    DyckSystem nested(parse_word(DyckSystem::dyck_alphabet(), "(())"));
    auto rep2 = dyck_entropy_report(nested, 14, 7);
    // The slope estimator overshoots log 3 at this horizon even for the
    // unrestricted shift (whose entropy is exactly log 3), so the subsystem is
    // checked strictly below the same-horizon baseline instead.
    ok = ok && rep2.estimate.point < base.estimate.point;
    ok = ok && rep2.claimed_bound && std::abs(*rep2.claimed_bound - std::log(2.0 + 63.0 / 64.0)) < 1e-12;
    ok = ok && rep2.b3_exact.has_value() && rep2.b3_claim_discrepancy;
    report(7, "dyck subsystem gap and discrepancy flag", ok);
}

void criterion8() {
    bool ok = true;
    SftLanguage gm(fixtures::golden_mean());
    SoficLanguage even(fixtures::even_shift());

    // Hereditary language.
    for (const Language* lang : {static_cast<const Language*>(&gm), static_cast<const Language*>(&even)})
        for (const Word& w : admissible_words(*lang, 6))
            for (size_t i = 0; i < w.size() && ok; ++i)
                for (size_t len = 1; i + len <= w.size(); ++len)
                    ok = ok && lang->admissible(Word(w.begin() + static_cast<long>(i),
                                                     w.begin() + static_cast<long>(i + len)));

    // Submultiplicativity.
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            ok = ok && sofic_block_count(fixtures::even_shift(), m + n) <=
                           sofic_block_count(fixtures::even_shift(), m) *
                               sofic_block_count(fixtures::even_shift(), n);

    // A/C reversal bijection.
    DyckSystem d;
    auto classes = dyck_count_classes(d, 10);
    for (int n = 1; n <= 10; ++n)
        ok = ok && classes.a[static_cast<size_t>(n)] == classes.c[static_cast<size_t>(n)];

    // h_syn <= h at matched horizons (counts dominate).
    for (int n = 1; n <= 10; ++n)
        ok = ok && synchronized_count(gm, Word{0}, n) <= count_blocks(fixtures::golden_mean(), n);

    // gcd monotonicity in the horizon.
    int prev = 0;
    for (int h = 2; h <= 10; h += 2) {
        int g = 0;
        for (int l : extract_generators(even, Word{0}, h).listed_lengths()) g = std::gcd(g, l);
        if (prev != 0 && g != 0) ok = ok && prev % g == 0;
        if (g != 0) prev = g;
    }

    // Subsystem count monotonicity.
    for (int n = 1; n <= 10; ++n)
        ok = ok && dyck_block_count(DyckSystem(parse_word(DyckSystem::dyck_alphabet(), "()")), n) <=
                       dyck_block_count(d, n);

    // zeta exp/log round trip.
    auto t = periodic_table_sft(fixtures::golden_mean(), 8);
    auto p = series_log(zeta_from_periodic(t, 8));
    for (int n = 1; n <= 8; ++n) ok = ok && p[static_cast<size_t>(n)] == BigRat(t.at(n));

    // Determinize/minimize preserve the language.
    LabeledGraph fischer = fischer_cover_sofic(fixtures::full_shift_messy());
    for (int n = 1; n <= 8; ++n) ok = ok && sofic_block_count(fischer, n) == (BigInt(1) << n);

    report(8, "property suites", ok);
}

void criterion9() {
    SftLanguage gm(fixtures::golden_mean());
    SoficLanguage even(fixtures::even_shift());
    bool ok = subsystem_gap_harness(gm, 4, 12).all_positive &&
              subsystem_gap_harness(even, 4, 12).all_positive;
    report(9, "subsystem entropy gaps", ok);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
