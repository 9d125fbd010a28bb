#include <doctest.h>

#include <symdyn/series.hpp>

#include "fixtures.hpp"

using namespace symdyn;

namespace {

IntSeries make_series(std::vector<long long> cs) {
    IntSeries s(static_cast<int>(cs.size()) - 1);
    for (size_t i = 0; i < cs.size(); ++i) s[i] = cs[i];
    return s;
}

} // namespace

TEST_CASE("periodic point counts of the golden mean are Lucas numbers") {
    auto gm = fixtures::golden_mean();
    const int lucas[] = {1, 3, 4, 7, 11, 18, 29, 47};
    for (int n = 1; n <= 8; ++n) {
        CHECK(periodic_points_sft(gm, n) == lucas[n - 1]);
        CHECK(periodic_points_sft_enumerate(gm, n) == lucas[n - 1]);
    }
}

TEST_CASE("full shift periodic points") {
    auto full = fixtures::full_2shift();
    for (int n = 1; n <= 10; ++n)
        CHECK(periodic_points_sft(full, n) == (BigInt(1) << n));
}

TEST_CASE("zeta of the golden mean has Fibonacci coefficients") {
    auto t = periodic_table_sft(fixtures::golden_mean(), 8);
    IntSeries z = zeta_from_periodic(t, 8);
    CHECK(z == make_series({1, 1, 2, 3, 5, 8, 13, 21, 34}));
    // 1 / (1 - t - t^2) agrees.
    CHECK(z == zeta_loop(make_series({0, 1, 1, 0, 0, 0, 0, 0, 0}), 8));
}

TEST_CASE("zeta of the full 2-shift is 1/(1-2t)") {
    auto t = periodic_table_sft(fixtures::full_2shift(), 8);
    IntSeries z = zeta_from_periodic(t, 8);
    for (int k = 0; k <= 8; ++k)
        CHECK(z[static_cast<size_t>(k)] == (BigInt(1) << k));
}

TEST_CASE("non-integer zeta coefficients are an integrity failure") {
    PeriodicTable t;
    t.set(1, 1);
    t.set(2, 2); // inconsistent: forces a fractional coefficient
    CHECK_THROWS_AS(zeta_from_periodic(t, 2), integrity_error);
}

TEST_CASE("series log inverts zeta") {
    auto t = periodic_table_sft(fixtures::golden_mean(), 8);
    IntSeries z = zeta_from_periodic(t, 8);
    auto p = series_log(z);
    for (int n = 1; n <= 8; ++n)
        CHECK(p[static_cast<size_t>(n)] == BigRat(t.at(n)));
}

TEST_CASE("loop zeta from a loop spec") {
    LoopSpec spec;
    spec.finite_lengths = {1, 2};
    CHECK(first_return_series(spec, 6) == make_series({0, 1, 1, 0, 0, 0, 0}));
    CHECK(zeta_loop(spec, 8) == zeta_loop(make_series({0, 1, 1, 0, 0, 0, 0, 0, 0}), 8));

    LoopSpec odd;
    odd.progressions = {{1, 2}};
    CHECK(first_return_series(odd, 6) == make_series({0, 1, 0, 1, 0, 1, 0}));

    IntSeries bad = make_series({1, 1});
    CHECK_THROWS_AS(zeta_loop(bad, 1), input_error); // nonzero constant term
}

TEST_CASE("depth product matches the even shift zeta") {
    // Two-level tower: level 1 = loops of every odd length, level 2 = a single 1-loop.
    LoopSpec level1;
    level1.progressions = {{1, 2}};
    LoopSpec level2;
    level2.finite_lengths = {1};
    std::vector<IntSeries> fs{first_return_series(level1, 8), first_return_series(level2, 8)};
    IntSeries product = zeta_depth_product(fs, 8);

    PeriodicTable t = periodic_table_sofic(fixtures::even_shift(), 8);
    CHECK(product == zeta_from_periodic(t, 8));

    CHECK(zeta_depth_product({}, 4) == make_series({1, 0, 0, 0, 0}));
}

TEST_CASE("linear recurrence detection") {
    // Lucas numbers: order-2 recurrence a_n = a_{n-1} + a_{n-2}.
    auto rec = detect_linear_recurrence(periodic_table_sft(fixtures::golden_mean(), 16), 4);
    REQUIRE(rec.has_value());
    CHECK(rec->order == 2);
    CHECK(rec->coeff == std::vector<BigRat>{1, 1});

    // Powers of two: order 1.
    std::vector<BigInt> pow2;
    for (int k = 0; k < 16; ++k) pow2.push_back(BigInt(1) << k);
    auto rec2 = detect_linear_recurrence(pow2, 4);
    REQUIRE(rec2.has_value());
    CHECK(rec2->order == 1);
    CHECK(rec2->coeff == std::vector<BigRat>{2});

    // Factorials satisfy no fixed-coefficient linear recurrence of low order.
    std::vector<BigInt> fact{1};
    for (int k = 1; k < 16; ++k) fact.push_back(fact.back() * k);
    CHECK_FALSE(detect_linear_recurrence(fact, 3).has_value());

    // Too little data is an input error, not a guess.
    std::vector<BigInt> tiny{1, 2, 3};
    CHECK_THROWS_AS(detect_linear_recurrence(tiny, 4), input_error);
}

TEST_CASE("detected recurrences predict beyond the fit range") {
    auto t = periodic_table_sofic(fixtures::even_shift(), 20);
    auto rec = detect_linear_recurrence(t, 4);
    REQUIRE(rec.has_value());
    // Re-predict the tail from the recurrence.
    for (int n = rec->start + rec->order; n <= 20; ++n) {
        BigRat acc = 0;
        for (int i = 0; i < rec->order; ++i) acc += rec->coeff[static_cast<size_t>(i)] * BigRat(t.at(n - 1 - i));
        CHECK(acc == BigRat(t.at(n)));
    }
}

TEST_CASE("series multiplication truncates") {
    IntSeries a = make_series({1, 1});
    IntSeries b = make_series({1, 2, 1});
    IntSeries c = series_mul(a, b);
    CHECK(c.order() == 1);
    CHECK(c[0] == 1);
    CHECK(c[1] == 3);
}
