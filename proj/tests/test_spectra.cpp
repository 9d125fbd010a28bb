#include <doctest.h>

#include <cmath>

#include <symdyn/language.hpp>
#include <symdyn/spectra.hpp>

#include "fixtures.hpp"

using namespace symdyn;

namespace {
const double log_phi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
}

TEST_CASE("entropy estimate from block counts") {
    SftLanguage gm(fixtures::golden_mean());
    auto est = entropy_from_counts(block_count_table(gm, 12), 6);
    CHECK(est.point == doctest::Approx(log_phi).epsilon(5e-3));
    CHECK(est.ratio_estimate == doctest::Approx(log_phi).epsilon(5e-3));
    CHECK(est.horizon == 12);

    CountTable bad;
    bad.kind = CountKind::synchronized;
    CHECK_THROWS_AS(entropy_from_counts(bad, 6), input_error);
}

TEST_CASE("synchronized counts") {
    SftLanguage gm(fixtures::golden_mean());
    // Frozen from enumeration: v with 0v0 admissible.
    CHECK(synchronized_count(gm, Word{0}, 0) == 1); // v = epsilon
    CHECK(synchronized_count(gm, Word{0}, 1) == 2); // v in {0, 1}
    CHECK(synchronized_count(gm, Word{0}, 2) == 3); // 00, 01, 10

    SoficLanguage even(fixtures::even_shift());
    const int fib[] = {1, 2, 3, 5, 8, 13, 21, 34};
    for (int n = 1; n <= 8; ++n)
        CHECK(synchronized_count(even, Word{0}, n) == fib[n - 1]);

    CHECK_THROWS_AS(synchronized_count(gm, Word{1, 1}, 2), input_error); // alpha inadmissible
}

TEST_CASE("synchronized counts agree with the brute-force oracle") {
    SoficLanguage even(fixtures::even_shift());
    for (int n = 0; n <= 8; ++n) {
        BigInt brute = 0;
        // enumerate all v of length n over {0,1}
        for (int mask = 0; mask < (1 << n); ++mask) {
            Word v;
            for (int i = 0; i < n; ++i) v.push_back((mask >> i) & 1);
            Word ava{0};
            ava.insert(ava.end(), v.begin(), v.end());
            ava.push_back(0);
            if (even.admissible(ava)) ++brute;
        }
        CHECK(synchronized_count(even, Word{0}, n) == brute);
    }
}

TEST_CASE("h_syn tracks h for synchronized examples") {
    SftLanguage gm(fixtures::golden_mean());
    auto hs = h_syn(gm, Word{0}, 12);
    auto h = entropy_from_counts(block_count_table(gm, 12), 6);
    CHECK(hs.point == doctest::Approx(h.point).epsilon(2e-2));
    // Counting property: C_n <= B_n always.
    for (int n = 1; n <= 10; ++n)
        CHECK(synchronized_count(gm, Word{0}, n) <= count_blocks(fixtures::golden_mean(), n));
}

TEST_CASE("cover entropy consistency check") {
    SftLanguage full(fixtures::full_2shift());
    SftLanguage gm(fixtures::golden_mean());
    SoficLanguage even(fixtures::even_shift());
    CHECK(entropy_consistency_check(*full.cover(), full, Word{0}, 12, 0.02).consistent);
    CHECK(entropy_consistency_check(*gm.cover(), gm, Word{0}, 12, 0.02).consistent);
    CHECK(entropy_consistency_check(*even.cover(), even, Word{0}, 12, 0.02).consistent);
}

TEST_CASE("loop entropy by exact bisection") {
    LoopSpec golden;
    golden.finite_lengths = {1, 2};
    auto est = loop_entropy(golden, 1e-9);
    REQUIRE(est.enclosure.has_value());
    CHECK(est.enclosure->second - est.enclosure->first <= 2e-9);
    CHECK(est.enclosure->first <= log_phi);
    CHECK(log_phi <= est.enclosure->second);

    LoopSpec single;
    single.finite_lengths = {1}; // f = t, root at 1: zero entropy
    auto est1 = loop_entropy(single, 1e-9);
    CHECK(est1.point == doctest::Approx(0.0).epsilon(1e-6));

    LoopSpec odd;
    odd.progressions = {{1, 2}}; // even shift loop structure
    auto est2 = loop_entropy(odd, 1e-9);
    CHECK(est2.point == doctest::Approx(log_phi).epsilon(1e-6));
}

TEST_CASE("recurrence classification of loop systems") {
    LoopSpec golden;
    golden.finite_lengths = {1, 2};
    auto rep = classify_recurrence(golden);
    CHECK(rep.cls == RecurrenceClass::positive_recurrent);
    REQUIRE(rep.mean_return_time.has_value());
    // x = 1/phi; mean = x f'(x) = x + 2x^2.
    const double x = 2.0 / (1.0 + std::sqrt(5.0));
    CHECK(*rep.mean_return_time == doctest::Approx(x + 2 * x * x).epsilon(1e-6));
    CHECK(rep.entropy == doctest::Approx(log_phi).epsilon(1e-6));
}

TEST_CASE("subsystem gap harness") {
    SftLanguage gm(fixtures::golden_mean());
    auto rep = subsystem_gap_harness(gm, 2, 12);
    CHECK(rep.all_positive);
    CHECK(rep.entries.size() == 2 + 3); // admissible words of length 1 and 2
    for (const auto& e : rep.entries) CHECK(e.gap > 0);

    SoficLanguage even(fixtures::even_shift());
    auto rep2 = subsystem_gap_harness(even, 2, 12);
    CHECK(rep2.all_positive);

    // Subsystem count monotonicity: every extension has counts <= the base.
    CountTable base = block_count_table(gm, 10);
    for (const Word& w : admissible_words(gm, 1)) {
        std::vector<Word> forb = fixtures::golden_mean().forbidden();
        forb.push_back(w);
        SftPresentation sub(fixtures::binary(), forb);
        for (int n = 1; n <= 10; ++n)
            CHECK(count_blocks(sub, n) <= base.at(n));
    }
}
